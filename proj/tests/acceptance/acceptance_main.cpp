// Acceptance suite: runs every release criterion at full scale and prints
// one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "conetop/report.hpp"
#include "conetop/rng.hpp"

using namespace conetop;

namespace {

int g_failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int index, const std::string& name, bool pass, const std::string& detail) {
  if (!pass) ++g_failures;
  std::printf("%s  criterion %2d  %-28s %s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
}

long suite_violations(const std::vector<ReportRow>& rows) {
  long bad = 0;
  for (const auto& r : rows) {
    if (r.verdict != "pass") ++bad;
  }
  return bad;
}

ExperimentConfig acceptance_config() {
  ExperimentConfig c;  // library defaults: seed 42, 1e4 samples, n_max 256
  return c;
}

void criterion_1_relation_algebra(const ExperimentConfig& c) {
  Timer timer;
  const auto rows = suite_relation_algebra(c);
  const double t = timer.seconds();
  const long bad = suite_violations(rows);
  report(1, "relation-algebra", bad == 0 && t < 5.0,
         std::to_string(rows.size()) + " checks, " + std::to_string(bad) + " failing, " +
             std::to_string(t) + "s (limit 5s)");
}

void criterion_2_theorem4(const ExperimentConfig& c) {
  const auto rows = suite_interval_equivalence(c);
  long bad = 0;
  std::string detail;
  for (const auto& r : rows) {
    if (r.verdict != "pass") {
      ++bad;
      detail += r.case_id + " ";
    }
  }
  report(2, "interval-intersection", bad == 0,
         detail.empty() ? "zero mismatches across 10 partitions" : detail);
}

void criterion_3_pairings(const ExperimentConfig& c) {
  const auto rows = suite_pairings(c);
  report(3, "z-zs-pairings", suite_violations(rows) == 0,
         "Z and ZS membership equal their interval-cap-manifold routes");
}

void criterion_4_dashed(const ExperimentConfig& c) {
  const auto rows = suite_dashed(c);
  report(4, "dashed-constructions", suite_violations(rows) == 0,
         "dashed minus punctured light cone and Z = ZT u ZS");
}

void criterion_5_lemma1(const ExperimentConfig& c) {
  Timer timer;
  const Report rep = kernel_verify_run(c);
  const double t = timer.seconds();
  bool pass = rep.failures() == 0 && t < 10.0;
  std::string detail;
  for (const auto& r : rep.rows) {
    if (r.case_id == "lemma1") {
      detail = r.detail;
      pass = pass && r.verdict == "pass";
    }
  }
  report(5, "finite-kernel-exactness", pass,
         detail + ", " + std::to_string(t) + "s (limit 10s)");
}

void criterion_6_discriminators(const ExperimentConfig& c) {
  const auto rows = suite_discriminators(c);
  long bad = 0;
  std::string detail;
  for (const auto& r : rows) {
    if (r.verdict != "pass") {
      ++bad;
      detail += r.case_id + ": " + r.note + "; ";
    }
  }
  report(6, "convergence-discriminators", bad == 0,
         bad == 0 ? "3 sequences x 12 kinds match the derived pattern at N=256" : detail);
}

void criterion_7_lct(const ExperimentConfig& c) {
  Timer timer;
  const TolerancePolicy tol = c.tolerance();
  const CurveFamily fam = rotating_null_geodesics(c.theta0, c.s_max);
  LctParams params;
  params.schedule = c.lct_schedule();
  params.gamma_samples = c.gamma_samples;
  params.horizon = Horizon{c.n_max, c.tail_fraction};
  params.partition = default_partition(2);

  bool pass = true;
  std::string detail;

  const Verdict manifold =
      limit_curve_check(fam, fam.limit_curve(), TopologyKind::Manifold, LimitDefn::D1, params, tol);
  if (manifold.outcome != Outcome::Converges) {
    pass = false;
    detail += "manifold not accepted; ";
  }
  for (TopologyKind k : {TopologyKind::ZT, TopologyKind::IntSpacelike}) {
    const Verdict v = limit_curve_check(fam, fam.limit_curve(), k, LimitDefn::D1, params, tol);
    if (v.outcome != Outcome::Refuted) {
      pass = false;
      detail += std::string(to_string(k)) + " not refuted; ";
    }
  }

  // The algebraic certificate at p = (1,1,0): Q(s) = -2 s (1 - cos theta_n),
  // re-verified at ten times the sampling density.
  const Event p = make_event({1.0, 1.0, 0.0});
  const BasicNbhd zt_at_p = make_basic_nbhd(TopologyKind::ZT, p, 0.5);
  const BasicNbhd min_at_p = make_basic_nbhd(TopologyKind::IntSpacelike, p);
  for (int n : {1, 16, 256}) {
    const double expected_b = -2.0 * (1.0 - std::cos(c.theta0 / n));
    for (const BasicNbhd* b : {&zt_at_p, &min_at_p}) {
      const MeetResult r = curve_meets_nbhd(fam.curve(n), *b, tol);
      const bool ok = !r.meets && r.analytic && std::abs(r.q_quadratic.a) <= 1e-12 &&
                      std::abs(r.q_quadratic.b - expected_b) <= 1e-12 &&
                      certificate_reverifies(fam.curve(n), *b, tol, 512, 10);
      if (!ok) {
        pass = false;
        detail += "certificate failed at n=" + std::to_string(n) + "; ";
      }
    }
  }
  const double t = timer.seconds();
  if (t >= 1.0) {
    pass = false;
    detail += "runtime " + std::to_string(t) + "s over the 1s limit; ";
  }

  // The dashed divergence from the light-cone restoration argument is
  // reported, never suppressed: refuted dashed rows must carry a note.
  const TopologyKind dash_kinds[] = {TopologyKind::ZTDash, TopologyKind::ZSDash,
                                     TopologyKind::IntSpacelikeDash, TopologyKind::IntCausalDash};
  const LimitDefn defns[] = {LimitDefn::D1};
  const CurveFamily fams[] = {fam};
  const auto rows = lct_matrix(fams, dash_kinds, defns, params, tol, 1);
  bool divergence_reported = false;
  for (const auto& row : rows) {
    if (row.verdict == "refuted") {
      divergence_reported = true;
      if (row.note.empty()) {
        pass = false;
        detail += "refuted dashed row missing its note; ";
      }
    }
  }
  if (!divergence_reported) {
    pass = false;
    detail += "expected at least one dashed kind to diverge under D1; ";
  }

  report(7, "limit-curve-experiment", pass,
         pass ? "manifold accepted, ZT and IntSpacelike refuted with certificates, " +
                    std::to_string(t) + "s (limit 1s), dashed divergence reported"
              : detail);
}

void criterion_8_traces(const ExperimentConfig& c) {
  const auto rows = suite_traces(c);
  report(8, "axis-trace-conditions", suite_violations(rows) == 0,
         "time-axis and space-axis traces at 1e4 samples per line");
}

void criterion_9_alexandrov(const ExperimentConfig& c) {
  const auto rows = suite_alexandrov(c);
  report(9, "alexandrov-refinement", suite_violations(rows) == 0,
         "diamond-in-ball (delta = eps/2) and ball-in-diamond on sampled centers");
}

void criterion_10_determinism(const ExperimentConfig& c) {
  ExperimentConfig fast = c;
  fast.samples = 2000;
  fast.trials = 100;
  ExperimentConfig c1 = fast, c4 = fast;
  c1.threads = 1;
  c4.threads = 4;

  const Report p1 = props_run(c1);
  const Report p4 = props_run(c4);
  bool pass = p1.to_json() == p4.to_json() && p1.to_csv() == p4.to_csv();

  ExperimentConfig l1 = c, l4 = c;
  l1.threads = 1;
  l4.threads = 4;
  const Report r1 = lct_run(l1);
  const Report r4 = lct_run(l4);
  pass = pass && r1.to_json() == r4.to_json() && r1.to_csv() == r4.to_csv();

  report(10, "report-determinism", pass,
         "props-run and lct-run byte-identical across 1 and 4 threads, seed 42");
}

}  // namespace

int main() {
  const ExperimentConfig c = acceptance_config();
  std::printf("acceptance suite: seed %llu, %d samples, horizon %d\n",
              static_cast<unsigned long long>(c.seed), c.samples, c.n_max);

  criterion_1_relation_algebra(c);
  criterion_2_theorem4(c);
  criterion_3_pairings(c);
  criterion_4_dashed(c);
  criterion_5_lemma1(c);
  criterion_6_discriminators(c);
  criterion_7_lct(c);
  criterion_8_traces(c);
  criterion_9_alexandrov(c);
  criterion_10_determinism(c);

  std::printf("%d of 10 criteria passing\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
