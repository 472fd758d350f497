#pragma once

#include <optional>
#include <string>
#include <vector>

#include "basepack/instances.hpp"
#include "basepack/online.hpp"
#include "basepack/rational.hpp"

namespace basepack {

struct ExperimentConfig {
  std::string instance_path;
  std::string algorithm = "greedy";  // greedy|ccv_known|ccv_offline|alg1|alg2|
                                     // alg3|alg1_combined|alg2_combined|alg3_combined
  long long trials = 1;
  std::uint64_t master_seed = 0;
  std::string q_solver = "auto";         // generic|specialized|auto
  std::string reference_level = "none";  // none|kstar|full
};

struct TrialResult {
  long long trial = 0;
  std::uint64_t seed = 0;
  std::string branch;  // "-" for non-combined algorithms
  long long base_colors = 0;
  std::vector<TraceStep> trace;
  long long pair_updates = 0;
};

struct ReferenceValues {
  std::optional<long long> opt;
  std::optional<long long> k_star;
  std::optional<long long> q_star;
  std::optional<long long> lambda;
};

/// Per-timestep good/bad flags plus the reason split for bad timesteps.
struct TimestepFlags {
  std::vector<char> good;
  long long good_count = 0;
  long long bad_small = 0;
  long long bad_large = 0;
};

struct Diagnostics {
  bool available = false;
  std::string rule;  // "quotient" or "pairs"
  std::vector<Rational> estimates;
  TimestepFlags flags;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string instance_kind;
  std::string instance_label;
  long long rank = 0;
  std::vector<TrialResult> per_trial;
  double mean_base_colors = 0.0;
  long long min_base_colors = 0;
  long long max_base_colors = 0;
  double stddev_base_colors = 0.0;
  std::optional<double> competitive_ratio;
  ReferenceValues references;
  Diagnostics diagnostics;

  /// Stable-key JSON; byte-identical for identical (config, seed).
  std::string to_json() const;
  /// Columns: trial,algorithm,seed,branch,base_colors,opt_ref,k_star_ref,
  /// lambda_ref,good_count,bad_count. Missing references are empty fields.
  std::string to_csv() const;
};

/// Deterministic per-timestep estimator sequence the diagnostics are based
/// on: q_t for quotient-driven algorithms, pair-counter eta_t for alg3.
std::vector<Rational> estimator_sequence(const Instance& inst,
                                         const std::string& algorithm,
                                         const std::string& q_solver_mode);

/// Good iff k*/(2r) < q_t < 2r k* (exact rational comparisons).
TimestepFlags classify_timesteps_quotient(const std::vector<Rational>& estimates,
                                          long long k_star_ref, long long r);

/// Good iff lambda/n^2 <= eta_t <= lambda.
TimestepFlags classify_timesteps_pairs(const std::vector<Rational>& estimates,
                                       long long lambda_ref, int n);

/// q_t callback for the instance; mode generic|specialized|auto.
QSolver make_q_solver(const Instance& inst, const std::string& mode);

ExperimentReport run_experiment(const ExperimentConfig& config);
ExperimentReport run_experiment(const ExperimentConfig& config,
                                const Instance& inst);

/// Parses a JSON config file ({"instance", "algorithm", "trials", "seed",
/// "q_solver", "reference"}); unknown fields are rejected.
ExperimentConfig parse_config_json(const std::string& text);

}  // namespace basepack
