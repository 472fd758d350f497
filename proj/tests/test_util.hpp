#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "basepack/core.hpp"
#include "basepack/instances.hpp"
#include "basepack/rng.hpp"

namespace basepack::testutil {

inline Subset mask(std::initializer_list<int> elems) {
  Subset s = 0;
  for (int e : elems) s = with(s, e);
  return s;
}

inline HypergraphInstance hyper(int vertex_count,
                                std::vector<std::vector<int>> edges) {
  HypergraphInstance h;
  h.vertex_count = vertex_count;
  h.hyperedges = std::move(edges);
  return h;
}

inline GraphInstance graph(int vertex_count,
                           std::vector<std::pair<int, int>> edges) {
  GraphInstance g;
  g.vertex_count = vertex_count;
  g.edges = std::move(edges);
  return g;
}

inline GraphInstance triangle() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

/// V = {a, b} with hyperedges {a}, {a,b} (a=0, b=1).
inline HypergraphInstance cover_ab() { return hyper(2, {{0}, {0, 1}}); }

/// V = {a, b} with hyperedges {a}, {a,b}, {b}.
inline HypergraphInstance cover_abb() { return hyper(2, {{0}, {0, 1}, {1}}); }

inline GraphInstance random_graph(std::uint64_t seed, int vertex_count,
                                  int edge_count) {
  RngStream rng(seed);
  GraphInstance g;
  g.vertex_count = vertex_count;
  for (int i = 0; i < edge_count; ++i) {
    int u = static_cast<int>(rng.below(vertex_count));
    int v = static_cast<int>(rng.below(vertex_count - 1));
    if (v >= u) ++v;
    g.edges.emplace_back(u, v);
  }
  return g;
}

/// Connected random multigraph: a random spanning tree plus random edges.
inline GraphInstance random_connected_graph(std::uint64_t seed,
                                            int vertex_count, int edge_count) {
  RngStream rng(seed);
  GraphInstance g;
  g.vertex_count = vertex_count;
  for (int v = 1; v < vertex_count; ++v) {
    g.edges.emplace_back(static_cast<int>(rng.below(v)), v);
  }
  while (static_cast<int>(g.edges.size()) < edge_count) {
    int u = static_cast<int>(rng.below(vertex_count));
    int v = static_cast<int>(rng.below(vertex_count - 1));
    if (v >= u) ++v;
    g.edges.emplace_back(u, v);
  }
  return g;
}

/// Random matrix with no zero rows, so every element has positive rank.
inline MatrixInstance random_matrix(std::uint64_t seed, int rows, int dim,
                                    long long modulus) {
  RngStream rng(seed);
  MatrixInstance m;
  m.dimension = dim;
  m.modulus = modulus;
  for (int i = 0; i < rows; ++i) {
    std::vector<long long> row(dim);
    bool nonzero = false;
    while (!nonzero) {
      for (auto& v : row) {
        v = static_cast<long long>(rng.below(static_cast<std::uint64_t>(modulus)));
        if (v != 0) nonzero = true;
      }
    }
    m.rows.push_back(row);
  }
  return m;
}

/// A mixed corpus of small oracles covering all instance families.
/// Every element has positive singleton value.
struct CorpusEntry {
  std::string family;
  Polymatroid oracle;
};

inline std::vector<CorpusEntry> small_corpus(int per_family,
                                             std::uint64_t seed_base = 1000) {
  std::vector<CorpusEntry> out;
  for (int i = 0; i < per_family; ++i) {
    std::uint64_t s = seed_base + static_cast<std::uint64_t>(i);
    RngStream rng(s);
    int nv = 3 + static_cast<int>(rng.below(3));    // 3..5 vertices
    int m = 4 + static_cast<int>(rng.below(5));     // 4..8 elements
    out.push_back({"graphic", graphic_oracle(random_graph(s * 7 + 1, nv, m))});
    out.push_back(
        {"coverage",
         coverage_oracle(generate_random_hypergraph(s * 7 + 2, nv, m, 1, nv > 3 ? 3 : nv),
                         /*allow_partial_cover=*/true)});
    out.push_back(
        {"connectivity",
         connectivity_oracle(generate_random_hypergraph(s * 7 + 3, nv, m, 2, 3))});
    int dim = 3 + static_cast<int>(rng.below(2));
    out.push_back({"linear",
                   linear_oracle(random_matrix(s * 7 + 4, m, dim,
                                               rng.below(2) == 0 ? 2 : 3))});
  }
  return out;
}

}  // namespace basepack::testutil
