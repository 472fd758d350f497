#include "basepack/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "basepack/quotient.hpp"

namespace basepack {

ColorAssignment ccv_offline(const Polymatroid& f, RngStream& rng,
                            std::optional<long long> k_star_override) {
  long long ks = k_star_override ? *k_star_override : k_star(f);
  return ccv_known_kstar(f, ks, rng);
}

bool sampling_trial(int m, long long rank, const SubsetRankFn& rank_fn,
                    double p, RngStream& rng) {
  if (rank < 2) throw std::invalid_argument("sampling_trial requires r >= 2");
  std::vector<int> sample;
  for (int e = 0; e < m; ++e) {
    if (rng.bernoulli(p)) sample.push_back(e);
  }
  return rank_fn(sample) == rank;
}

bool sampling_trial(const Polymatroid& f, std::optional<double> p_override,
                    RngStream& rng) {
  double p;
  if (p_override) {
    p = *p_override;
  } else {
    double ks = static_cast<double>(k_star(f));
    p = std::min(1.0, 2.0 * std::log2(static_cast<double>(f.rank())) / ks);
  }
  return sampling_trial(f.ground_size(), f.rank(),
                        [&f](const std::vector<int>& elems) {
                          Subset s = 0;
                          for (int e : elems) s = with(s, e);
                          return f.eval(s);
                        },
                        p, rng);
}

long long global_min_cut(const HypergraphInstance& h) {
  validate(h);
  int n = h.vertex_count;
  if (n < 2) throw std::invalid_argument("global_min_cut requires n >= 2");
  if (n > 20) throw CapacityError("global_min_cut: too many vertices");
  Subset all = full_mask(n);
  long long best = -1;
  for (Subset s = 1; s < all; ++s) {
    long long crossing = 0;
    for (const auto& e : h.hyperedges) {
      bool inside = false, outside = false;
      for (int v : e) (contains(s, v) ? inside : outside) = true;
      if (inside && outside) ++crossing;
    }
    if (best < 0 || crossing < best) best = crossing;
  }
  return best;
}

long long global_min_cut(const GraphInstance& g) {
  validate(g);
  HypergraphInstance h;
  h.vertex_count = g.vertex_count;
  for (const auto& [u, v] : g.edges) h.hyperedges.push_back({u, v});
  return global_min_cut(h);
}

long long weak_partition_connectivity(const HypergraphInstance& h) {
  return k_star(connectivity_oracle(h));
}

namespace {

long long crossing_over_parts(const GraphInstance& g,
                              const std::vector<int>& part_of) {
  long long crossing = 0;
  for (const auto& [u, v] : g.edges) {
    if (part_of[u] != part_of[v]) ++crossing;
  }
  return crossing;
}

/// Enumerates set partitions via restricted-growth strings.
void enumerate_partitions(int n, int i, int max_part, std::vector<int>& part_of,
                          const GraphInstance& g, long long& best) {
  if (i == n) {
    int parts = max_part + 1;
    if (parts >= 2) {
      best = std::min(best, crossing_over_parts(g, part_of) / (parts - 1));
    }
    return;
  }
  for (int p = 0; p <= max_part + 1; ++p) {
    part_of[i] = p;
    enumerate_partitions(n, i + 1, std::max(max_part, p), part_of, g, best);
  }
}

}  // namespace

long long spanning_tree_packing_number(const GraphInstance& g) {
  validate(g);
  int n = g.vertex_count;
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  if (n > 10) throw CapacityError("spanning_tree_packing_number: too many vertices");
  long long best = 1LL << 40;
  std::vector<int> part_of(n, 0);
  part_of[0] = 0;
  enumerate_partitions(n, 1, 0, part_of, g, best);
  return best;
}

}  // namespace basepack
