#include "basepack/harness.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "basepack/quotient.hpp"
#include "basepack/reference.hpp"
#include "basepack/rng.hpp"
#include "basepack/strength.hpp"
#include "json.hpp"

namespace basepack {

namespace {

const std::set<std::string>& known_algorithms() {
  static const std::set<std::string> names = {
      "greedy",        "ccv_known",     "ccv_offline",
      "alg1",          "alg2",          "alg3",
      "alg1_combined", "alg2_combined", "alg3_combined"};
  return names;
}

bool is_pair_algorithm(const std::string& algorithm) {
  return algorithm == "alg3" || algorithm == "alg3_combined";
}

bool needs_q_sequence(const std::string& algorithm) {
  return algorithm == "alg1" || algorithm == "alg1_combined";
}

HypergraphInstance as_hypergraph(const Instance& inst) {
  if (inst.kind == "coverage" || inst.kind == "connectivity") {
    return inst.hypergraph;
  }
  if (inst.kind == "graphic" || inst.kind == "cographic") {
    HypergraphInstance h;
    h.vertex_count = inst.graph.vertex_count;
    h.label = inst.graph.label;
    for (const auto& [u, v] : inst.graph.edges) h.hyperedges.push_back({u, v});
    return h;
  }
  throw std::invalid_argument("algorithm requires a hypergraph or graph instance");
}

SubsetRankFn make_rank_fn(const Instance& inst) {
  return [inst](const std::vector<int>& elems) { return subset_rank(inst, elems); };
}

template <typename T>
void wrap_capacity(const std::string& reference_name, const T& fn) {
  try {
    fn();
  } catch (const CapacityError& e) {
    throw CapacityError("reference " + reference_name + ": " + e.what());
  }
}

ReferenceValues compute_references(const Instance& inst,
                                   const std::string& level) {
  ReferenceValues refs;
  if (level == "none") return refs;
  if (level != "kstar" && level != "full") {
    throw std::invalid_argument("unknown reference level: " + level);
  }
  wrap_capacity("k_star", [&] {
    if (inst.kind == "graphic") {
      // Base-packing number equals k* for matroids, and the partition
      // formula computes it without enumerating subsets of a large edge set.
      refs.k_star = spanning_tree_packing_number(inst.graph);
    } else {
      refs.k_star = k_star(inst.oracle());
    }
  });
  if (inst.kind == "graphic" || inst.kind == "cographic") {
    wrap_capacity("lambda", [&] { refs.lambda = global_min_cut(inst.graph); });
  } else if (inst.kind == "connectivity" || inst.kind == "coverage") {
    wrap_capacity("lambda", [&] { refs.lambda = global_min_cut(inst.hypergraph); });
  }
  if (level == "full") {
    wrap_capacity("opt", [&] {
      if (inst.kind == "graphic") {
        refs.opt = spanning_tree_packing_number(inst.graph);
      } else {
        refs.opt = opt_bruteforce(inst.oracle());
      }
    });
    wrap_capacity("q_star", [&] {
      refs.q_star = min_nonempty_quotient(inst.oracle());
    });
  }
  return refs;
}

long long k_star_for_algorithm(const Instance& inst) {
  if (inst.kind == "graphic") return spanning_tree_packing_number(inst.graph);
  return k_star(inst.oracle());
}

std::vector<Rational> pair_eta_sequence(const HypergraphInstance& h) {
  // Deterministic replay of alg3's counters, independent of any trial RNG.
  RngStream throwaway(0);
  ColorAssignment a = alg3(h, std::max(h.vertex_count, 2), throwaway);
  std::vector<Rational> etas;
  for (const auto& step : a.trace) etas.push_back(step.estimate);
  return etas;
}

}  // namespace

QSolver make_q_solver(const Instance& inst, const std::string& mode) {
  bool has_specialized = inst.kind == "graphic" || inst.kind == "coverage" ||
                         inst.kind == "connectivity";
  bool specialized = mode == "specialized" || (mode == "auto" && has_specialized);
  if (mode != "generic" && mode != "specialized" && mode != "auto") {
    throw std::invalid_argument("unknown q_solver mode: " + mode);
  }
  if (mode == "specialized" && !has_specialized) {
    throw std::invalid_argument("no specialized q solver for kind " + inst.kind);
  }
  QSolver inner;
  if (specialized) {
    Instance copy = inst;
    if (inst.kind == "graphic") {
      inner = [copy](int t) { return q_t_graphic(copy.graph, t).value; };
    } else if (inst.kind == "coverage") {
      inner = [copy](int t) { return q_t_coverage(copy.hypergraph, t).value; };
    } else {
      inner = [copy](int t) { return q_t_connectivity(copy.hypergraph, t).value; };
    }
  } else {
    auto f = std::make_shared<Polymatroid>(inst.oracle());
    inner = [f](int t) {
      return min_quotient_containing(restrict(*f, full_mask(t)), t - 1).value;
    };
  }
  // Degenerate arrivals (zero singleton value) are reported as 0 so the
  // algorithm can color them arbitrarily without an estimate.
  Instance copy = inst;
  return [copy, inner](int t) {
    if (subset_rank(copy, {t - 1}) == 0) return 0LL;
    return inner(t);
  };
}

std::vector<Rational> estimator_sequence(const Instance& inst,
                                         const std::string& algorithm,
                                         const std::string& q_solver_mode) {
  if (is_pair_algorithm(algorithm)) {
    return pair_eta_sequence(as_hypergraph(inst));
  }
  if (algorithm == "alg2" || algorithm == "alg2_combined") {
    Polymatroid f = inst.oracle();
    std::vector<Rational> etas;
    Subset active = 0;
    for (int t = 1; t <= f.ground_size(); ++t) {
      int e = t - 1;
      if (f.eval(Subset{1} << e) == 0) {
        etas.emplace_back(0, 1);  // degenerate arrival
        continue;
      }
      active = with(active, e);
      Polymatroid prefix = restrict(f, active);
      StrengthDecomposition d = strength_decomposition(prefix);
      etas.push_back(eta_estimate(prefix, d, popcount(active) - 1));
    }
    return etas;
  }
  QSolver solver = make_q_solver(inst, q_solver_mode);
  std::vector<Rational> qs;
  for (int t = 1; t <= inst.element_count(); ++t) {
    qs.emplace_back(solver(t), 1);
  }
  return qs;
}

TimestepFlags classify_timesteps_quotient(const std::vector<Rational>& estimates,
                                          long long k_star_ref, long long r) {
  if (k_star_ref < 1 || r < 1) {
    throw std::invalid_argument("classification needs k* >= 1 and r >= 1");
  }
  TimestepFlags out;
  Rational lower(k_star_ref, 2 * r);
  Rational upper(2 * r * k_star_ref, 1);
  for (const Rational& q : estimates) {
    bool small = !(lower < q);
    bool large = !(q < upper);
    bool good = !small && !large;
    out.good.push_back(good ? 1 : 0);
    if (good) {
      ++out.good_count;
    } else if (small) {
      ++out.bad_small;
    } else {
      ++out.bad_large;
    }
  }
  return out;
}

TimestepFlags classify_timesteps_pairs(const std::vector<Rational>& estimates,
                                       long long lambda_ref, int n) {
  if (lambda_ref < 1 || n < 1) {
    throw std::invalid_argument("classification needs lambda >= 1 and n >= 1");
  }
  TimestepFlags out;
  Rational lower(lambda_ref, static_cast<long long>(n) * n);
  Rational upper(lambda_ref, 1);
  for (const Rational& eta : estimates) {
    bool small = eta < lower;
    bool large = upper < eta;
    bool good = !small && !large;
    out.good.push_back(good ? 1 : 0);
    if (good) {
      ++out.good_count;
    } else if (small) {
      ++out.bad_small;
    } else {
      ++out.bad_large;
    }
  }
  return out;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.instance_path.empty()) {
    throw std::invalid_argument("config has no instance path");
  }
  return run_experiment(config, load_instance(config.instance_path));
}

ExperimentReport run_experiment(const ExperimentConfig& config,
                                const Instance& inst) {
  if (!known_algorithms().count(config.algorithm)) {
    throw std::invalid_argument("unknown algorithm: " + config.algorithm);
  }
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (is_pair_algorithm(config.algorithm) && inst.kind == "linear_gfp") {
    throw std::invalid_argument("alg3 requires a hypergraph or graph instance");
  }

  ExperimentReport report;
  report.config = config;
  report.instance_kind = inst.kind;
  report.instance_label = inst.label;
  int m = inst.element_count();
  long long r = instance_rank(inst);
  report.rank = r;
  SubsetRankFn rank_fn = make_rank_fn(inst);

  // Inputs the algorithms themselves need, computed once.
  std::vector<long long> q_values;
  if (needs_q_sequence(config.algorithm)) {
    QSolver solver = make_q_solver(inst, config.q_solver);
    for (int t = 1; t <= m; ++t) q_values.push_back(solver(t));
  }
  QSolver cached_q = [&q_values](int t) { return q_values.at(t - 1); };
  std::optional<long long> algorithm_k_star;
  if (config.algorithm == "ccv_known" || config.algorithm == "ccv_offline") {
    algorithm_k_star = k_star_for_algorithm(inst);
  }
  std::optional<Polymatroid> oracle;  // alg2 needs the full oracle
  if (config.algorithm == "alg2" || config.algorithm == "alg2_combined") {
    oracle = inst.oracle();
  }
  std::optional<HypergraphInstance> hyper;
  if (is_pair_algorithm(config.algorithm)) hyper = as_hypergraph(inst);

  for (long long trial = 0; trial < config.trials; ++trial) {
    TrialResult tr;
    tr.trial = trial;
    tr.seed = mix64(config.master_seed, static_cast<std::uint64_t>(trial));
    RngStream rng(tr.seed);
    ColorAssignment a;
    if (config.algorithm == "greedy") {
      a = greedy_single(m, r, rank_fn);
    } else if (config.algorithm == "ccv_known" ||
               config.algorithm == "ccv_offline") {
      a = ccv_known_kstar(m, r, *algorithm_k_star, rng);
    } else if (config.algorithm == "alg1") {
      a = alg1(m, r, cached_q, rng);
    } else if (config.algorithm == "alg1_combined") {
      a = combined_alg1(m, r, cached_q, rng);
    } else if (config.algorithm == "alg2") {
      a = alg2(*oracle, r, rng);
    } else if (config.algorithm == "alg2_combined") {
      a = combined_alg2(*oracle, r, rng);
    } else if (config.algorithm == "alg3") {
      a = alg3(*hyper, hyper->vertex_count, rng);
    } else {
      a = combined_alg3(*hyper, hyper->vertex_count, rng);
    }
    tr.branch = a.branch.empty() ? "-" : a.branch;
    tr.base_colors = count_base_colors(m, r, rank_fn, a);
    tr.trace = std::move(a.trace);
    tr.pair_updates = a.pair_updates;
    report.per_trial.push_back(std::move(tr));
  }

  long long total = 0;
  report.min_base_colors = report.per_trial.front().base_colors;
  report.max_base_colors = report.per_trial.front().base_colors;
  for (const auto& tr : report.per_trial) {
    total += tr.base_colors;
    report.min_base_colors = std::min(report.min_base_colors, tr.base_colors);
    report.max_base_colors = std::max(report.max_base_colors, tr.base_colors);
  }
  report.mean_base_colors =
      static_cast<double>(total) / static_cast<double>(config.trials);
  double sq = 0.0;
  for (const auto& tr : report.per_trial) {
    double d = static_cast<double>(tr.base_colors) - report.mean_base_colors;
    sq += d * d;
  }
  report.stddev_base_colors = config.trials > 1
                                  ? std::sqrt(sq / static_cast<double>(config.trials - 1))
                                  : 0.0;

  report.references = compute_references(inst, config.reference_level);
  if (report.references.opt && report.mean_base_colors > 0.0) {
    report.competitive_ratio =
        static_cast<double>(*report.references.opt) / report.mean_base_colors;
  }

  if (config.reference_level != "none") {
    if (is_pair_algorithm(config.algorithm)) {
      if (report.references.lambda && *report.references.lambda >= 1) {
        report.diagnostics.available = true;
        report.diagnostics.rule = "pairs";
        report.diagnostics.estimates =
            estimator_sequence(inst, config.algorithm, config.q_solver);
        report.diagnostics.flags = classify_timesteps_pairs(
            report.diagnostics.estimates, *report.references.lambda,
            hyper ? hyper->vertex_count : inst.element_count());
      }
    } else if (report.references.k_star && *report.references.k_star >= 1 &&
               r >= 1) {
      report.diagnostics.available = true;
      report.diagnostics.rule = "quotient";
      report.diagnostics.estimates =
          estimator_sequence(inst, config.algorithm, config.q_solver);
      report.diagnostics.flags = classify_timesteps_quotient(
          report.diagnostics.estimates, *report.references.k_star, r);
    }
  }
  return report;
}

namespace {

using nlohmann::ordered_json;

ordered_json optional_to_json(const std::optional<long long>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

std::string ExperimentReport::to_json() const {
  ordered_json j;
  j["config"] = {
      {"instance", config.instance_path},
      {"kind", instance_kind},
      {"label", instance_label},
      {"algorithm", config.algorithm},
      {"trials", config.trials},
      {"master_seed", config.master_seed},
      {"q_solver", config.q_solver},
      {"reference_level", config.reference_level},
      {"rank", rank},
  };
  j["per_trial"] = ordered_json::array();
  for (const auto& tr : per_trial) {
    ordered_json t;
    t["trial"] = tr.trial;
    t["seed"] = tr.seed;
    t["branch"] = tr.branch;
    t["base_colors"] = tr.base_colors;
    t["pair_updates"] = tr.pair_updates;
    t["trace"] = ordered_json::array();
    for (const auto& step : tr.trace) {
      ordered_json s;
      s["t"] = step.t;
      s["estimate"] = step.estimate.str();
      s["ell"] = step.ell;
      s["R"] = step.R;
      s["palette"] = step.palette;
      s["color"] = step.color;
      if (!step.note.empty()) s["note"] = step.note;
      t["trace"].push_back(std::move(s));
    }
    j["per_trial"].push_back(std::move(t));
  }
  j["aggregate"] = {
      {"mean_base_colors", mean_base_colors},
      {"min_base_colors", min_base_colors},
      {"max_base_colors", max_base_colors},
      {"stddev_base_colors", stddev_base_colors},
      {"competitive_ratio",
       competitive_ratio ? ordered_json(*competitive_ratio) : ordered_json(nullptr)},
  };
  j["references"] = {
      {"opt", optional_to_json(references.opt)},
      {"k_star", optional_to_json(references.k_star)},
      {"q_star", optional_to_json(references.q_star)},
      {"lambda", optional_to_json(references.lambda)},
  };
  ordered_json d;
  d["available"] = diagnostics.available;
  if (diagnostics.available) {
    d["rule"] = diagnostics.rule;
    d["estimates"] = ordered_json::array();
    for (const auto& e : diagnostics.estimates) d["estimates"].push_back(e.str());
    d["good"] = ordered_json::array();
    for (char g : diagnostics.flags.good) d["good"].push_back(g != 0);
    d["good_count"] = diagnostics.flags.good_count;
    d["bad_small"] = diagnostics.flags.bad_small;
    d["bad_large"] = diagnostics.flags.bad_large;
  }
  j["diagnostics"] = std::move(d);
  return j.dump(2) + "\n";
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out << "trial,algorithm,seed,branch,base_colors,opt_ref,k_star_ref,"
         "lambda_ref,good_count,bad_count\n";
  auto opt_str = [](const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  std::string good_str, bad_str;
  if (diagnostics.available) {
    good_str = std::to_string(diagnostics.flags.good_count);
    bad_str = std::to_string(diagnostics.flags.bad_small +
                             diagnostics.flags.bad_large);
  }
  for (const auto& tr : per_trial) {
    out << tr.trial << ',' << config.algorithm << ',' << tr.seed << ','
        << tr.branch << ',' << tr.base_colors << ','
        << opt_str(references.opt) << ',' << opt_str(references.k_star) << ','
        << opt_str(references.lambda) << ',' << good_str << ',' << bad_str
        << '\n';
  }
  return out.str();
}

ExperimentConfig parse_config_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  static const std::vector<std::string> allowed = {
      "instance", "algorithm", "trials", "seed", "q_solver", "reference"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      throw std::invalid_argument("unknown config field: " + it.key());
    }
  }
  ExperimentConfig c;
  c.instance_path = j.value("instance", "");
  c.algorithm = j.value("algorithm", c.algorithm);
  c.trials = j.value("trials", c.trials);
  c.master_seed = j.value("seed", c.master_seed);
  c.q_solver = j.value("q_solver", c.q_solver);
  c.reference_level = j.value("reference", c.reference_level);
  return c;
}

}  // namespace basepack
