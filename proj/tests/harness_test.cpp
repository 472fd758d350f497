#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "basepack/harness.hpp"
#include "basepack/instances.hpp"
#include "test_util.hpp"

using namespace basepack;
using namespace basepack::testutil;

namespace {

Instance k3_instance() {
  Instance inst = as_instance(triangle());
  inst.label = "K3";
  return inst;
}

}  // namespace

TEST_CASE("greedy on K3 with full references") {
  ExperimentConfig config;
  config.algorithm = "greedy";
  config.trials = 1;
  config.reference_level = "full";
  ExperimentReport report = run_experiment(config, k3_instance());
  CHECK(report.per_trial.size() == 1);
  CHECK(report.per_trial[0].base_colors == 1);
  CHECK(report.references.opt == 1);
  CHECK(report.references.k_star == 1);
  CHECK(report.references.q_star == 2);
  CHECK(report.references.lambda == 2);
  CHECK(report.competitive_ratio == 1.0);
  CHECK(report.rank == 2);
}

TEST_CASE("report JSON is byte-identical across reruns") {
  ExperimentConfig config;
  config.algorithm = "alg1_combined";
  config.trials = 6;
  config.master_seed = 99;
  config.reference_level = "full";
  Instance inst = k3_instance();
  std::string a = run_experiment(config, inst).to_json();
  std::string b = run_experiment(config, inst).to_json();
  CHECK(a == b);
  CHECK(!a.empty());
}

TEST_CASE("CSV agrees with the JSON report fields") {
  ExperimentConfig config;
  config.algorithm = "alg1";
  config.trials = 4;
  config.master_seed = 3;
  config.reference_level = "full";
  ExperimentReport report = run_experiment(config, k3_instance());
  std::istringstream csv(report.to_csv());
  std::string header;
  std::getline(csv, header);
  CHECK(header ==
        "trial,algorithm,seed,branch,base_colors,opt_ref,k_star_ref,"
        "lambda_ref,good_count,bad_count");
  for (const auto& tr : report.per_trial) {
    std::string line;
    REQUIRE(std::getline(csv, line));
    std::ostringstream expect;
    expect << tr.trial << ",alg1," << tr.seed << ",-," << tr.base_colors
           << ',' << *report.references.opt << ','
           << *report.references.k_star << ',' << *report.references.lambda
           << ',' << report.diagnostics.flags.good_count << ','
           << (report.diagnostics.flags.bad_small +
               report.diagnostics.flags.bad_large);
    CHECK(line == expect.str());
  }
}

TEST_CASE("timestep classification rules") {
  // All estimates inside (k*/2r, 2rk*).
  std::vector<Rational> qs = {Rational(1, 1), Rational(1, 1), Rational(2, 1)};
  TimestepFlags flags = classify_timesteps_quotient(qs, 1, 2);
  CHECK(flags.good == std::vector<char>{1, 1, 1});
  CHECK(flags.good_count == 3);

  // Boundaries are exclusive: q = k*/(2r) and q = 2rk* are both bad.
  TimestepFlags edge = classify_timesteps_quotient(
      {Rational(1, 1), Rational(4, 1), Rational(8, 1)}, 2, 2);
  CHECK(edge.good == std::vector<char>{1, 1, 0});
  CHECK(edge.bad_large == 1);
  TimestepFlags small = classify_timesteps_quotient({Rational(1, 1)}, 8, 4);
  CHECK(small.good == std::vector<char>{0});
  CHECK(small.bad_small == 1);

  // Hypergraph rule is inclusive on both sides: lambda/n^2 <= eta <= lambda.
  TimestepFlags pairs = classify_timesteps_pairs(
      {Rational(1, 1), Rational(9, 1), Rational(10, 1)}, 9, 3);
  CHECK(pairs.good == std::vector<char>{1, 1, 0});
  CHECK(pairs.bad_large == 1);
  TimestepFlags pair_small = classify_timesteps_pairs({Rational(1, 1)}, 10, 3);
  CHECK(pair_small.bad_small == 1);

  CHECK_THROWS_AS(classify_timesteps_quotient({}, 0, 2), std::invalid_argument);
}

TEST_CASE("estimator sequences per algorithm family") {
  Instance inst = k3_instance();
  std::vector<Rational> qs = estimator_sequence(inst, "alg1", "auto");
  CHECK(qs == std::vector<Rational>{Rational(1, 1), Rational(1, 1), Rational(2, 1)});
  std::vector<Rational> qg = estimator_sequence(inst, "alg1", "generic");
  CHECK(qs == qg);
  std::vector<Rational> etas = estimator_sequence(inst, "alg2", "auto");
  REQUIRE(etas.size() == 3);
  std::vector<Rational> pair_etas = estimator_sequence(inst, "alg3", "auto");
  CHECK(pair_etas ==
        std::vector<Rational>{Rational(1, 1), Rational(1, 1), Rational(1, 1)});
}

TEST_CASE("q solver modes") {
  Instance inst = k3_instance();
  QSolver specialized = make_q_solver(inst, "specialized");
  QSolver generic = make_q_solver(inst, "generic");
  for (int t = 1; t <= 3; ++t) CHECK(specialized(t) == generic(t));
  CHECK_THROWS_AS(make_q_solver(as_instance(random_matrix(1, 4, 3, 2)),
                                "specialized"),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_q_solver(inst, "sideways"), std::invalid_argument);
}

TEST_CASE("config validation and errors") {
  Instance inst = k3_instance();
  ExperimentConfig config;
  config.algorithm = "mystery";
  CHECK_THROWS_AS(run_experiment(config, inst), std::invalid_argument);
  config.algorithm = "greedy";
  config.trials = 0;
  CHECK_THROWS_AS(run_experiment(config, inst), std::invalid_argument);
  config.trials = 1;
  config.algorithm = "alg3";
  CHECK_THROWS_AS(run_experiment(config, as_instance(random_matrix(2, 4, 3, 2))),
                  std::invalid_argument);

  // Capacity failures name the guilty reference.
  ExperimentConfig big;
  big.algorithm = "greedy";
  big.reference_level = "kstar";
  Instance mat = as_instance(random_matrix(3, 24, 5, 2));
  try {
    run_experiment(big, mat);
    FAIL("expected capacity error");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("k_star") != std::string::npos);
  }
}

TEST_CASE("config JSON parsing") {
  ExperimentConfig c = parse_config_json(
      R"({"instance":"x.json","algorithm":"alg3","trials":7,"seed":5,)"
      R"("q_solver":"generic","reference":"full"})");
  CHECK(c.instance_path == "x.json");
  CHECK(c.algorithm == "alg3");
  CHECK(c.trials == 7);
  CHECK(c.master_seed == 5);
  CHECK(c.q_solver == "generic");
  CHECK(c.reference_level == "full");
  CHECK_THROWS_AS(parse_config_json(R"({"bogus":1})"), std::invalid_argument);
}

TEST_CASE("at-scale graphic instance with kstar references") {
  ExperimentConfig config;
  config.algorithm = "alg1";
  config.trials = 3;
  config.master_seed = 17;
  config.q_solver = "auto";
  config.reference_level = "kstar";
  Instance pp = as_instance(generate_parallel_path({40, 40}));
  ExperimentReport report = run_experiment(config, pp);
  CHECK(report.rank == 2);
  CHECK(report.references.k_star == 40);
  CHECK(report.references.lambda == 40);
  CHECK(report.diagnostics.available);
  CHECK(report.diagnostics.flags.good.size() == 80);
}

TEST_CASE("branch column for combined runs") {
  ExperimentConfig config;
  config.algorithm = "alg3_combined";
  config.trials = 10;
  config.master_seed = 1;
  Instance inst = as_instance(hyper(3, {{0, 1}, {1, 2}, {0, 2}}), "connectivity");
  ExperimentReport report = run_experiment(config, inst);
  for (const auto& tr : report.per_trial) {
    CHECK((tr.branch == "algorithm" || tr.branch == "all_ones"));
  }
}
