#ifndef OPCHECK_SUITES_HPP
#define OPCHECK_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "opcheck/serialize.hpp"

namespace opcheck {

/// Configuration of one suite run.  `dim` is the operand dimension;
/// `dim_out` (when nonzero) is the output-side dimension of the
/// contraction / isometry family / channel, defaulting to `dim`.
struct SuiteConfig {
  std::string suite;
  int dim = 4;
  int dim_out = 0;
  int trials = 200;
  std::uint64_t seed = 1;
  double tol_abs = kDefaultTolAbs;
  double tol_rel = kDefaultTolRel;
  double cond_cap = 1e3;
  std::string map = "lift:square";
  std::string mean = "binary:0.5";
  std::string channel = "identity";
  int terms = 3;  // isometry-family size for jensen-sum

  int resolved_dim_out() const { return dim_out > 0 ? dim_out : dim; }
};

struct TrialRecord {
  int i = 0;
  std::uint64_t seed = 0;
  double slack = 0.0;
  double tol = 0.0;
  bool pass = true;
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<TrialRecord> trials;
  double worst_slack = 0.0;
  int failures = 0;
  double wall_ms = 0.0;
  std::vector<std::string> dumps;
};

/// Names of all registered suites (in registration order).
std::vector<std::string> suite_names();
std::string suite_summary(const std::string& name);

/// Build the self-contained instance payload for one trial: every
/// operand, map/mean/channel realization, and tolerance needed to
/// evaluate the inequality, serialized.  Pure function of (cfg, trial);
/// all randomness comes from substream(cfg.seed, trial).
json build_instance(const SuiteConfig& cfg, int trial);

struct EvalResult {
  double slack = 0.0;
  double tol = 0.0;
  bool pass() const { return slack >= -tol; }
};

/// Evaluate a payload produced by build_instance (or read back from a
/// dump file).  Running the same payload twice gives bit-identical
/// slack.
EvalResult evaluate_instance(const json& payload);

struct RunOptions {
  std::string dump_dir = "dumps";
  bool dump_all = false;  // dump every trial, not just failures
};

SuiteReport run_suite(const SuiteConfig& cfg, const RunOptions& opts = {});

json to_json(const SuiteReport& report);

struct ReplayOutcome {
  double recorded_slack = 0.0;
  double replayed_slack = 0.0;
  double tol = 0.0;
  bool reproduced = false;  // |replayed - recorded| <= 1e-12
  bool pass = false;        // inequality verdict of the replayed instance
};

/// Re-evaluate a dumped instance file's payload.
ReplayOutcome replay_instance(const json& dump);

}  // namespace opcheck

#endif  // OPCHECK_SUITES_HPP
