#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "basepack/harness.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online disjoint-base packing experiment runner"};

  std::string config_path, instance, algorithm, q_solver, reference, out_path;
  std::string format = "json";
  long long trials = -1;
  std::uint64_t seed = 0;
  bool seed_set = false;

  app.add_option("--config", config_path, "JSON config file; flags override its fields");
  app.add_option("--instance", instance, "Instance JSON path");
  app.add_option("--algorithm", algorithm,
                 "greedy|ccv_known|ccv_offline|alg1|alg2|alg3|"
                 "alg1_combined|alg2_combined|alg3_combined");
  app.add_option("--trials", trials, "Number of trials (>= 1)");
  auto* seed_opt = app.add_option("--seed", seed, "Master seed (64-bit)");
  app.add_option("--q-solver", q_solver, "generic|specialized|auto");
  app.add_option("--reference", reference, "none|kstar|full");
  app.add_option("--out", out_path, "Output path (default: stdout)");
  app.add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);
  seed_set = seed_opt->count() > 0;

  try {
    basepack::ExperimentConfig config;
    if (!config_path.empty()) {
      config = basepack::parse_config_json(slurp(config_path));
    }
    if (!instance.empty()) config.instance_path = instance;
    if (!algorithm.empty()) config.algorithm = algorithm;
    if (trials >= 0) config.trials = trials;
    if (seed_set) config.master_seed = seed;
    if (!q_solver.empty()) config.q_solver = q_solver;
    if (!reference.empty()) config.reference_level = reference;

    basepack::ExperimentReport report = basepack::run_experiment(config);
    std::string rendered =
        format == "csv" ? report.to_csv() : report.to_json();
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
      out << rendered;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
