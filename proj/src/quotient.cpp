#include "basepack/quotient.hpp"

#include <algorithm>

#include "basepack/maxflow.hpp"

namespace basepack {

namespace {

constexpr int kGenericGuard = 22;
constexpr long long kInf = 1LL << 40;

void check_generic_capacity(const Polymatroid& f, const char* op) {
  if (f.ground_size() > kGenericGuard) {
    throw CapacityError(std::string(op) + ": ground set too large for brute force");
  }
}

}  // namespace

EstimatorValue min_quotient_containing(const Polymatroid& f, int e) {
  if (e < 0 || e >= f.ground_size()) {
    throw std::invalid_argument("element index out of range");
  }
  if (f.eval(Subset{1} << e) <= 0) {
    throw std::invalid_argument("element has zero singleton value");
  }
  check_generic_capacity(f, "min_quotient_containing");
  int n = f.ground_size();
  // min |Q| with e in Q equals n - max{|A| : A closed, e not in A}.
  Subset candidates = without(full_mask(n), e);
  long long best_closed = -1;
  for (Subset a = candidates;; a = (a - 1) & candidates) {
    if (popcount(a) > best_closed && is_closed(f, a)) {
      best_closed = popcount(a);
    }
    if (a == 0) break;
  }
  // span(empty) excludes e since f(e) > 0, so a candidate always exists.
  return {n - best_closed, "generic_bruteforce"};
}

EstimatorValue q_t_graphic(const GraphInstance& g, int edge_prefix) {
  validate(g);
  if (edge_prefix < 1 || edge_prefix > static_cast<int>(g.edges.size())) {
    throw std::invalid_argument("edge prefix out of range");
  }
  auto [u, v] = g.edges[edge_prefix - 1];
  MaxFlow flow(g.vertex_count);
  for (int i = 0; i < edge_prefix; ++i) {
    flow.add_edge(g.edges[i].first, g.edges[i].second, 1);
    flow.add_edge(g.edges[i].second, g.edges[i].first, 1);
  }
  return {flow.run(u, v), "graphic_mincut"};
}

EstimatorValue q_t_coverage(const HypergraphInstance& h, int edge_prefix) {
  validate(h);
  if (edge_prefix < 1 || edge_prefix > static_cast<int>(h.hyperedges.size())) {
    throw std::invalid_argument("edge prefix out of range");
  }
  long long best = kInf;
  for (int vertex : h.hyperedges[edge_prefix - 1]) {
    long long degree = 0;
    for (int i = 0; i < edge_prefix; ++i) {
      const auto& e = h.hyperedges[i];
      if (std::find(e.begin(), e.end(), vertex) != e.end()) ++degree;
    }
    best = std::min(best, degree);
  }
  return {best, "coverage_mindegree"};
}

EstimatorValue q_t_connectivity(const HypergraphInstance& h, int edge_prefix) {
  validate(h);
  if (edge_prefix < 1 || edge_prefix > static_cast<int>(h.hyperedges.size())) {
    throw std::invalid_argument("edge prefix out of range");
  }
  std::vector<int> last = h.hyperedges[edge_prefix - 1];
  std::sort(last.begin(), last.end());
  last.erase(std::unique(last.begin(), last.end()), last.end());
  if (last.size() < 2) {
    // No vertex pair exists, so no quotient can contain the hyperedge (its
    // singleton value is 0). Fall back to the minimum non-empty quotient of
    // the prefix, computed generically on small instances.
    HypergraphInstance prefix = h;
    prefix.hyperedges.resize(edge_prefix);
    Polymatroid f = connectivity_oracle(prefix);
    return {min_nonempty_quotient(f), "connectivity_pairwise_mincut"};
  }
  // Hyperedge-node construction: each arrived hyperedge becomes a
  // capacity-1 arc between its in/out copies.
  long long best = kInf;
  for (std::size_t a = 0; a < last.size(); ++a) {
    for (std::size_t b = a + 1; b < last.size(); ++b) {
      int nodes = h.vertex_count + 2 * edge_prefix;
      MaxFlow flow(nodes);
      for (int i = 0; i < edge_prefix; ++i) {
        int e_in = h.vertex_count + 2 * i;
        int e_out = e_in + 1;
        flow.add_edge(e_in, e_out, 1);
        for (int vertex : h.hyperedges[i]) {
          flow.add_edge(vertex, e_in, kInf);
          flow.add_edge(e_out, vertex, kInf);
        }
      }
      best = std::min(best, flow.run(last[a], last[b]));
    }
  }
  return {best, "connectivity_pairwise_mincut"};
}

long long min_nonempty_quotient(const Polymatroid& f) {
  check_generic_capacity(f, "min_nonempty_quotient");
  int n = f.ground_size();
  Subset all = full_mask(n);
  long long best_closed = -1;
  for (Subset a = 0; a < all; ++a) {
    if (popcount(a) > best_closed && is_closed(f, a)) {
      best_closed = popcount(a);
    }
  }
  if (best_closed < 0) {
    throw std::invalid_argument("no non-empty quotient exists");
  }
  return n - best_closed;
}

long long k_star(const Polymatroid& f) {
  if (f.rank() < 1) throw std::invalid_argument("k_star requires rank >= 1");
  check_generic_capacity(f, "k_star");
  int n = f.ground_size();
  Subset all = full_mask(n);
  long long best = kInf;
  // A closed set achieves the minimum, so only closed sets are enumerated.
  for (Subset a = 0; a <= all; ++a) {
    if (f.eval(a) < f.rank() && is_closed(f, a)) {
      long long total = 0;
      for (int e = 0; e < n; ++e) total += marginal(f, a, e);
      best = std::min(best, total / (f.rank() - f.eval(a)));
    }
    if (a == all) break;
  }
  return best;
}

namespace {

struct PackingSearch {
  const Polymatroid& f;
  int m;
  long long rank;
  std::vector<Subset> classes;

  bool all_bases() const {
    for (Subset c : classes) {
      if (f.eval(c) != rank) return false;
    }
    return true;
  }

  bool dfs(int i, Subset remaining) {
    if (all_bases()) return true;
    if (i == m) return false;
    // Every unfinished class must still be completable from the suffix.
    for (Subset c : classes) {
      if (f.eval(c) < rank && f.eval(c | remaining) < rank) return false;
    }
    Subset rest = without(remaining, i);
    bool tried_empty = false;
    for (auto& c : classes) {
      if (c == 0) {
        if (tried_empty) continue;  // symmetry: empty classes interchangeable
        tried_empty = true;
      }
      if (marginal(f, c, i) == 0) continue;  // equivalent to skipping
      c = with(c, i);
      if (dfs(i + 1, rest)) return true;
      c = without(c, i);
    }
    return dfs(i + 1, rest);  // leave element uncolored
  }
};

}  // namespace

long long opt_bruteforce(const Polymatroid& f) {
  int m = f.ground_size();
  if (m > 14) throw CapacityError("opt_bruteforce: ground set too large");
  if (f.rank() == 0) return m;  // every subset is a base
  long long upper = std::min<long long>(k_star(f), m);
  for (long long k = upper; k >= 1; --k) {
    PackingSearch search{f, m, f.rank(), std::vector<Subset>(k, 0)};
    if (search.dfs(0, full_mask(m))) return k;
  }
  return 0;  // unreachable: the full ground set is always a base
}

}  // namespace basepack
