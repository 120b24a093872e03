"""Cone topologies on Minkowski space.

Causal classification predicates, basic-open-set membership for the twelve
implemented topology kinds, exact finite-set topology algebra, and the
convergence / limit-curve experiment harness.
"""

from conetop._conetop import (
    classify,
    converges_ray,
    generate_from_subbase,
    intersection_topology,
    lct_check,
    lemma1_trials,
    member,
    quadratic_form,
    related,
    trace_on_line,
    version,
)

__all__ = [
    "classify",
    "converges_ray",
    "generate_from_subbase",
    "intersection_topology",
    "lct_check",
    "lemma1_trials",
    "member",
    "quadratic_form",
    "related",
    "trace_on_line",
    "version",
]

__version__ = version()
