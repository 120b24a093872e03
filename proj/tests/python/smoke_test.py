"""Smoke tests for the python module."""

import conetop as ct


def main() -> None:
    assert ct.version()

    assert ct.classify([0, 0, 0, 0], [1, 0, 0, 0]) == "ChronoFuture"
    assert ct.classify([0, 0, 0, 0], [1, 1, 0, 0]) == "HorismosFuture"
    assert ct.classify([0, 0, 0, 0], [0, 1, 0, 0]) == "Spacelike"
    assert ct.quadratic_form([1, 1, 0, 0]) == 0.0

    assert ct.member("ZT", [0, 0, 0, 0], [0.5, 0, 0, 0], eps=1.0)
    assert not ct.member("ZT", [0, 0, 0, 0], [0.5, 0.5, 0, 0], eps=1.0)
    assert ct.member("ZTDash", [0, 0, 0, 0], [0.5, 0.5, 0, 0], eps=1.0)
    assert ct.member("IntSpacelike", [0, 0, 0, 0], [0.5, 0, 0, 0])

    assert ct.related("Chrono", [0, 0, 0, 0], [1, 0, 0, 0])
    assert not ct.related("HorismosIrr", [0, 0, 0, 0], [0, 0, 0, 0])
    assert ct.related("SpacelikeLeq", [0, 0, 0, 0], [0, 1, 0, 0], axis=[1, 0, 0])

    topo = ct.generate_from_subbase(3, [0b011, 0b110])
    assert topo == [0b000, 0b010, 0b011, 0b110, 0b111]
    assert ct.intersection_topology(2, [0b00, 0b11], [0b00, 0b01, 0b11]) == [0b00, 0b01, 0b11]

    res = ct.lemma1_trials(n=6, trials=100, seed=42)
    assert res["pass"] == res["total"] == 100

    assert ct.converges_ray([1, 1, 0, 0], "ZT")["outcome"] == "refuted"
    assert ct.converges_ray([1, 1, 0, 0], "ZTDash")["outcome"] == "converges"
    assert ct.converges_ray([1, 0, 0, 0], "ZT")["outcome"] == "converges"
    assert ct.converges_ray([0, 1, 0, 0], "ZT")["outcome"] == "refuted"

    assert ct.lct_check("RotatingNullGeodesics", "Manifold")["outcome"] == "converges"
    refuted = ct.lct_check("RotatingNullGeodesics", "ZT")
    assert refuted["outcome"] == "refuted"
    assert "EMPTY" in refuted["certificate"]

    runs = ct.trace_on_line("ZT", [0, 0, 0, 0], 1.0, [0, 0, 0, 0], [1, 0, 0, 0])
    assert len(runs) == 1
    lo, hi = runs[0]
    assert abs(lo + 1.0) < 0.01 and abs(hi - 1.0) < 0.01

    print("smoke ok")


if __name__ == "__main__":
    main()
