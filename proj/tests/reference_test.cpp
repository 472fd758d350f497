#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "basepack/instances.hpp"
#include "basepack/maxflow.hpp"
#include "basepack/online.hpp"
#include "basepack/quotient.hpp"
#include "basepack/reference.hpp"
#include "test_util.hpp"

using namespace basepack;
using namespace basepack::testutil;

TEST_CASE("ccv_offline") {
  Polymatroid k3 = graphic_oracle(triangle());
  RngStream rng(1);
  ColorAssignment a = ccv_offline(k3, rng);  // k* = 1 -> palette {1}
  for (long long c : a.colors) CHECK(c == 1);
  CHECK(count_base_colors(k3, a) == 1);

  // parallel_path([20,20]): r = 2, k* = 20 supplied in closed form.
  GraphInstance pp = generate_parallel_path({20, 20});
  Polymatroid f = graphic_oracle(pp);
  double total = 0;
  const int trials = 200;
  for (int trial = 0; trial < trials; ++trial) {
    RngStream r(mix64(5, trial));
    total += static_cast<double>(
        count_base_colors(f, ccv_offline(f, r, 20)));
  }
  CHECK(total / trials >= 1.0);

  // Without an override the brute-force k* capacity guard propagates.
  RngStream r2(0);
  CHECK_THROWS_AS(ccv_offline(f, r2), CapacityError);

  RngStream d1(3), d2(3);
  CHECK(ccv_offline(k3, d1).colors == ccv_offline(k3, d2).colors);
}

TEST_CASE("sampling_trial degenerate probabilities") {
  Polymatroid pp = graphic_oracle(generate_parallel_path({3, 3}));
  RngStream rng(1);
  CHECK(sampling_trial(pp, 1.0, rng));
  CHECK_FALSE(sampling_trial(pp, 0.0, rng));
  RngStream low(2);
  CHECK_THROWS_AS(
      sampling_trial(1, 1, [](const std::vector<int>&) { return 0LL; }, 0.5, low),
      std::invalid_argument);
}

TEST_CASE("sampling lemma frequency at moderate scale") {
  // parallel_path([30,30]): r = 2, k* = 30, p = 2 log2(r) / k* = 1/15.
  // Lemma: success probability >= 1/2; allow generous Monte Carlo slack.
  Instance pp = as_instance(generate_parallel_path({30, 30}));
  SubsetRankFn rf = [pp](const std::vector<int>& e) { return subset_rank(pp, e); };
  int success = 0;
  const int trials = 2000;
  for (int trial = 0; trial < trials; ++trial) {
    RngStream rng(mix64(11, trial));
    if (sampling_trial(60, 2, rf, 2.0 / 30.0, rng)) ++success;
  }
  CHECK(static_cast<double>(success) / trials >= 0.45);
}

TEST_CASE("global_min_cut") {
  CHECK(global_min_cut(triangle()) == 2);
  CHECK(global_min_cut(hyper(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(global_min_cut(generate_parallel_path({5, 3})) == 3);
  CHECK(global_min_cut(hyper(3, {{0, 1, 2}, {0, 1, 2}})) == 2);
  CHECK_THROWS_AS(global_min_cut(hyper(1, {{0}})), std::invalid_argument);
}

TEST_CASE("global_min_cut agrees with pairwise max-flow") {
  for (int i = 0; i < 10; ++i) {
    GraphInstance g = random_connected_graph(400 + i, 5, 9);
    long long best = -1;
    for (int t = 1; t < g.vertex_count; ++t) {
      MaxFlow flow(g.vertex_count);
      for (const auto& [u, v] : g.edges) {
        flow.add_edge(u, v, 1);
        flow.add_edge(v, u, 1);
      }
      long long cut = flow.run(0, t);
      if (best < 0 || cut < best) best = cut;
    }
    CHECK(global_min_cut(g) == best);
  }
}

TEST_CASE("weak partition connectivity") {
  CHECK(weak_partition_connectivity(hyper(3, {{0, 1}, {1, 2}, {0, 2}})) == 1);
  CHECK(weak_partition_connectivity(hyper(2, {{0, 1}})) == 1);
  for (int i = 0; i < 10; ++i) {
    HypergraphInstance h = generate_random_hypergraph(500 + i, 4, 6, 2, 3);
    long long lambda = global_min_cut(h);
    if (lambda < 1) continue;  // disconnected: k* = 0 as well
    long long kg = weak_partition_connectivity(h);
    CHECK(kg <= lambda);
    CHECK(2 * kg >= lambda);  // Lemma 5.2: lambda/2 <= k*_G
  }
}

TEST_CASE("spanning tree packing number") {
  CHECK(spanning_tree_packing_number(generate_parallel_path({3, 3})) == 3);
  CHECK(spanning_tree_packing_number(generate_parallel_path({4, 2})) == 2);
  CHECK(spanning_tree_packing_number(triangle()) == 1);
  CHECK_THROWS_AS(spanning_tree_packing_number(random_graph(1, 11, 12)),
                  CapacityError);
  // Matches the matroid references on small graphs.
  for (int i = 0; i < 8; ++i) {
    GraphInstance g = random_connected_graph(600 + i, 4, 8);
    Polymatroid f = graphic_oracle(g);
    long long tnw = spanning_tree_packing_number(g);
    CHECK(tnw == k_star(f));
    CHECK(tnw == opt_bruteforce(f));
  }
}
