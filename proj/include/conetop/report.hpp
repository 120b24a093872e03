#pragma once

#include <string>
#include <vector>

#include "conetop/convergence.hpp"
#include "conetop/finite.hpp"
#include "conetop/topology.hpp"

namespace conetop {

inline constexpr const char* kToolName = "conetop";
inline constexpr const char* kToolVersion = "0.1.0";

/// Every knob of a run; all defaults are explicit so the report header can
/// echo the full configuration.
struct ExperimentConfig {
  std::uint64_t seed = 42;
  int dim = 3;
  double tau_rel = 1e-9;
  double eps0 = 1.0;
  int schedule_steps = 6;
  int n_max = 256;
  double tail_fraction = 0.9;
  int lct_schedule_steps = 3;
  int gamma_samples = 16;
  double theta0 = 0.5;
  double v0 = 0.9;
  double s_max = 2.0;
  int samples = 10000;
  int trials = 1000;
  int kernel_n = 6;
  int threads = 1;
  std::vector<double> partition_axis{1.0, 0.0, 0.0};
  std::vector<std::string> topologies;  // empty = all twelve
  std::vector<std::string> families;    // empty = all four
  std::vector<std::string> defns{"D1", "D2"};
  std::string out_dir = "out";

  TolerancePolicy tolerance() const { return TolerancePolicy{tau_rel}; }
  Schedule schedule() const { return Schedule{eps0, schedule_steps}; }
  Schedule lct_schedule() const { return Schedule{eps0, lct_schedule_steps}; }
  std::vector<TopologyKind> topology_kinds() const;  // validated
  std::vector<CurveFamily> curve_families() const;
  std::vector<LimitDefn> limit_defns() const;
};

std::string config_to_json(const ExperimentConfig& c);
/// Throws std::invalid_argument on unknown keys or malformed values.
ExperimentConfig config_from_json(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

struct ReportRow {
  std::string suite;
  std::string case_id;
  std::string verdict;  // pass/fail or converges/refuted/accepted
  std::string detail;
  std::string note;
};

struct Report {
  std::string command;
  ExperimentConfig config;
  std::vector<ReportRow> rows;

  int failures() const;
  std::string to_json() const;
  std::string to_csv() const;
};

void write_file(const std::string& path, const std::string& content);

/// Invariant suites behind props-run; each returns pass/fail rows.
std::vector<ReportRow> suite_relation_algebra(const ExperimentConfig& c);
std::vector<ReportRow> suite_interval_equivalence(const ExperimentConfig& c);
std::vector<ReportRow> suite_pairings(const ExperimentConfig& c);
std::vector<ReportRow> suite_dashed(const ExperimentConfig& c);
std::vector<ReportRow> suite_alexandrov(const ExperimentConfig& c);
std::vector<ReportRow> suite_traces(const ExperimentConfig& c);
std::vector<ReportRow> suite_nesting(const ExperimentConfig& c);
std::vector<ReportRow> suite_equivariance(const ExperimentConfig& c);
std::vector<ReportRow> suite_discriminators(const ExperimentConfig& c);
std::vector<ReportRow> suite_lct_consistency(const ExperimentConfig& c);

Report props_run(const ExperimentConfig& c);
Report converge_run(const ExperimentConfig& c);
Report lct_run(const ExperimentConfig& c);
Report kernel_verify_run(const ExperimentConfig& c);

/// The frozen accept/refute pattern of the three discriminator sequences
/// (null, timelike, spacelike direction) across all twelve kinds. The
/// pattern is derived at these reference parameters; other horizons or
/// radii move the tail thresholds.
inline constexpr int kDiscriminatorHorizon = 256;
inline constexpr Schedule kDiscriminatorSchedule{1.0, 6};
inline constexpr TolerancePolicy kDiscriminatorTolerance{1e-9};

struct DiscriminatorCase {
  std::string sequence;
  TopologyKind kind;
  Outcome expected;
};
std::vector<DiscriminatorCase> discriminator_expectations();

}  // namespace conetop
