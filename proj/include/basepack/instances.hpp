#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "basepack/core.hpp"

namespace basepack {

/// Hypergraph with an explicit arrival order (list order). E may be a
/// multiset; duplicate hyperedges are distinct elements.
struct HypergraphInstance {
  int vertex_count = 0;
  std::vector<std::vector<int>> hyperedges;
  std::string label;
};

/// Multigraph, parallel edges allowed, no self-loops.
struct GraphInstance {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  std::string label;
};

/// Row vectors over GF(p).
struct MatrixInstance {
  int dimension = 0;
  long long modulus = 2;
  std::vector<std::vector<long long>> rows;
  std::string label;
};

void validate(const HypergraphInstance& h);
void validate(const GraphInstance& g);
void validate(const MatrixInstance& m);

/// f(A) = |union of hyperedges in A|. By default the hypergraph must cover
/// all vertices (rank = vertex_count); pass allow_partial_cover to accept
/// rank = |covered vertices| instead.
Polymatroid coverage_oracle(const HypergraphInstance& h,
                            bool allow_partial_cover = false);

/// f(A) = |V| - c(V, A), components counted with isolated vertices.
Polymatroid connectivity_oracle(const HypergraphInstance& h);

/// Graphic matroid rank: f(A) = |V| - c(V, A).
Polymatroid graphic_oracle(const GraphInstance& g);

/// Cographic matroid rank: f(A) = |A| + c(V, E) - c(V, E \ A).
Polymatroid cographic_oracle(const GraphInstance& g);

/// Row rank over GF(p) by Gaussian elimination.
Polymatroid linear_oracle(const MatrixInstance& m);

/// Disjoint-set-cover to disjoint-connected-spanning reduction: a new vertex
/// is appended and every hyperedge stretched to include it.
HypergraphInstance setcover_to_connectivity(const HypergraphInstance& h);

HypergraphInstance generate_random_hypergraph(std::uint64_t seed, int n, int m,
                                              int min_edge_size,
                                              int max_edge_size);

/// Path on |segments|+1 vertices; segment i carries segments[i] parallel
/// edges. Arrival order interleaves the segments round-robin.
GraphInstance generate_parallel_path(const std::vector<int>& segments);

/// Instance JSON (schema: kind, vertex_count / dimension+modulus,
/// edges / rows, label). Unknown fields are rejected.
struct Instance {
  std::string kind;  // coverage|connectivity|graphic|cographic|linear_gfp
  HypergraphInstance hypergraph;  // coverage, connectivity
  GraphInstance graph;            // graphic, cographic
  MatrixInstance matrix;          // linear_gfp
  std::string label;

  int element_count() const;
  Polymatroid oracle() const;
};

/// Rank of an element subset given as an index list, computed directly from
/// the instance family. Unlike oracle() this has no 63-element cap, so it
/// backs base checks on at-scale instances.
long long subset_rank(const Instance& inst, const std::vector<int>& elements);
long long instance_rank(const Instance& inst);

Instance load_instance(const std::string& path);
Instance parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

Instance as_instance(const HypergraphInstance& h, const std::string& kind);
Instance as_instance(const GraphInstance& g, const std::string& kind = "graphic");
Instance as_instance(const MatrixInstance& m);

}  // namespace basepack
