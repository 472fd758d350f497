#pragma once

#include <string>

#include "basepack/core.hpp"
#include "basepack/instances.hpp"

namespace basepack {

/// Size of a minimum quotient/estimator value together with the solver that
/// produced it.
struct EstimatorValue {
  long long value = 1;
  std::string method;
};

/// Minimum size of a quotient of f that contains element e. Brute force over
/// closed sets; guarded at ground_size <= 22. The element must have positive
/// singleton value.
EstimatorValue min_quotient_containing(const Polymatroid& f, int e);

/// Graphic specialization: min u-v cut (unit capacities) in the prefix graph
/// (V, E_t) where e_t = (u, v); includes e_t itself.
/// edge_prefix is the number of arrived edges; e_index = edge_prefix - 1.
EstimatorValue q_t_graphic(const GraphInstance& g, int edge_prefix);

/// Coverage specialization: min over vertices of e_t of the number of
/// arrived hyperedges containing that vertex.
EstimatorValue q_t_coverage(const HypergraphInstance& h, int edge_prefix);

/// Connectivity specialization: min over vertex pairs {u, v} in e_t of the
/// hypergraph min u-v cut of the prefix (each hyperedge a capacity-1 node).
/// Singleton hyperedges fall back to the generic brute-force path.
EstimatorValue q_t_connectivity(const HypergraphInstance& h, int edge_prefix);

/// Minimum size over non-empty quotients of f.
long long min_nonempty_quotient(const Polymatroid& f);

/// k*(f) = min over A with f(A) < f(N) of
/// floor(sum_e (f(A+e)-f(A)) / (f(N)-f(A))); only closed sets need to be
/// enumerated.
long long k_star(const Polymatroid& f);

/// Maximum number of disjoint bases, by backtracking. Rank-0 oracles return
/// the ground-set size by convention.
long long opt_bruteforce(const Polymatroid& f);

}  // namespace basepack
