#pragma once

#include <optional>

#include "basepack/core.hpp"
#include "basepack/instances.hpp"
#include "basepack/online.hpp"
#include "basepack/rng.hpp"

namespace basepack {

/// Offline random coloring with palette floor(k*/(log2 r + log2 log2 r)).
/// k* is brute-forced unless an override is supplied (used for families
/// where k* is known in closed form but the ground set is large).
ColorAssignment ccv_offline(const Polymatroid& f, RngStream& rng,
                            std::optional<long long> k_star_override = {});

/// One sampling-lemma trial: include each element independently with
/// probability p = min(1, 2 log2 r / k*) (or the override) and report
/// whether the sample is a base. Requires r >= 2.
bool sampling_trial(const Polymatroid& f, std::optional<double> p_override,
                    RngStream& rng);

/// At-scale variant: the inclusion probability must be supplied directly.
bool sampling_trial(int m, long long rank, const SubsetRankFn& rank_fn,
                    double p, RngStream& rng);

/// lambda(G): minimum number of hyperedges crossing a nonempty proper
/// vertex subset. Exhaustive over vertex subsets; guarded at n <= 20.
long long global_min_cut(const HypergraphInstance& h);
long long global_min_cut(const GraphInstance& g);

/// k* of the connectivity polymatroid (capacity limits of k_star apply).
long long weak_partition_connectivity(const HypergraphInstance& h);

/// Maximum number of edge-disjoint spanning trees, via the partition
/// formula min over partitions P, |P| >= 2, of floor(cross(P) / (|P|-1)).
/// Exact for multigraphs; guarded at n <= 10.
long long spanning_tree_packing_number(const GraphInstance& g);

}  // namespace basepack
