#include "basepack/instances.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "basepack/rng.hpp"
#include "json.hpp"

namespace basepack {

namespace {

/// Union-find over a fixed number of nodes.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

int hypergraph_components(const HypergraphInstance& h,
                          const std::vector<char>& selected) {
  DisjointSets ds(h.vertex_count);
  int components = h.vertex_count;
  for (std::size_t i = 0; i < h.hyperedges.size(); ++i) {
    if (!selected[i]) continue;
    const auto& e = h.hyperedges[i];
    for (std::size_t j = 1; j < e.size(); ++j) {
      if (ds.unite(e[0], e[j])) --components;
    }
  }
  return components;
}

int graph_components(const GraphInstance& g, const std::vector<char>& selected) {
  DisjointSets ds(g.vertex_count);
  int components = g.vertex_count;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!selected[i]) continue;
    if (ds.unite(g.edges[i].first, g.edges[i].second)) --components;
  }
  return components;
}

std::vector<char> mask_to_selected(Subset mask, std::size_t m) {
  std::vector<char> selected(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (contains(mask, static_cast<int>(i))) selected[i] = 1;
  }
  return selected;
}

std::vector<char> indices_to_selected(const std::vector<int>& elements,
                                      std::size_t m) {
  std::vector<char> selected(m, 0);
  for (int e : elements) {
    if (e < 0 || e >= static_cast<int>(m)) {
      throw std::invalid_argument("element index out of range");
    }
    selected[e] = 1;
  }
  return selected;
}

int hypergraph_components(const HypergraphInstance& h, Subset edge_mask) {
  return hypergraph_components(h, mask_to_selected(edge_mask, h.hyperedges.size()));
}

int graph_components(const GraphInstance& g, Subset edge_mask) {
  return graph_components(g, mask_to_selected(edge_mask, g.edges.size()));
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

long long gf_rank(const MatrixInstance& m, const std::vector<char>& selected) {
  std::vector<std::vector<long long>> rows;
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (selected[i]) rows.push_back(m.rows[i]);
  }
  long long p = m.modulus;
  int rank = 0;
  for (int col = 0; col < m.dimension && rank < static_cast<int>(rows.size());
       ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    // Normalize pivot row via modular inverse (Fermat).
    long long inv = 1, base = rows[rank][col] % p, exp = p - 2;
    while (exp > 0) {
      if (exp & 1) inv = inv * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    for (auto& v : rows[rank]) v = v * inv % p;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] % p == 0) continue;
      long long factor = rows[r][col] % p;
      for (int c = 0; c < m.dimension; ++c) {
        rows[r][c] = ((rows[r][c] - factor * rows[rank][c]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

long long gf_rank(const MatrixInstance& m, Subset row_mask) {
  return gf_rank(m, mask_to_selected(row_mask, m.rows.size()));
}

/// Bitmask oracles enumerate subsets of a single word; larger instances must
/// go through subset_rank instead.
void require_oracle_capacity(std::size_t count) {
  if (count > 63) {
    throw CapacityError("oracle supports at most 63 elements");
  }
}

}  // namespace

void validate(const HypergraphInstance& h) {
  if (h.vertex_count <= 0) throw std::invalid_argument("vertex_count must be positive");
  for (const auto& e : h.hyperedges) {
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
    for (int v : e) {
      if (v < 0 || v >= h.vertex_count) {
        throw std::invalid_argument("hyperedge vertex out of range");
      }
    }
  }
}

void validate(const GraphInstance& g) {
  if (g.vertex_count <= 0) throw std::invalid_argument("vertex_count must be positive");
  for (const auto& [u, v] : g.edges) {
    if (u < 0 || u >= g.vertex_count || v < 0 || v >= g.vertex_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loops not allowed");
  }
}

void validate(const MatrixInstance& m) {
  if (m.dimension <= 0) throw std::invalid_argument("dimension must be positive");
  if (!is_prime(m.modulus)) throw std::invalid_argument("modulus must be prime");
  for (const auto& row : m.rows) {
    if (static_cast<int>(row.size()) != m.dimension) {
      throw std::invalid_argument("row length mismatch");
    }
    for (long long v : row) {
      if (v < 0 || v >= m.modulus) throw std::invalid_argument("entry outside GF(p)");
    }
  }
}

Polymatroid coverage_oracle(const HypergraphInstance& h,
                            bool allow_partial_cover) {
  validate(h);
  require_oracle_capacity(h.hyperedges.size());
  if (h.vertex_count > 63) throw CapacityError("too many vertices for coverage bitmask");
  std::vector<Subset> vertex_masks;
  vertex_masks.reserve(h.hyperedges.size());
  Subset covered = 0;
  for (const auto& e : h.hyperedges) {
    Subset m = 0;
    for (int v : e) m = with(m, v);
    vertex_masks.push_back(m);
    covered |= m;
  }
  if (!allow_partial_cover && covered != full_mask(h.vertex_count)) {
    throw std::invalid_argument("hypergraph does not cover all vertices");
  }
  return Polymatroid(static_cast<int>(h.hyperedges.size()),
                     [vertex_masks](Subset a) {
                       Subset u = 0;
                       for (std::size_t i = 0; i < vertex_masks.size(); ++i) {
                         if (contains(a, static_cast<int>(i))) u |= vertex_masks[i];
                       }
                       return static_cast<long long>(popcount(u));
                     });
}

Polymatroid connectivity_oracle(const HypergraphInstance& h) {
  validate(h);
  require_oracle_capacity(h.hyperedges.size());
  HypergraphInstance copy = h;
  return Polymatroid(static_cast<int>(h.hyperedges.size()), [copy](Subset a) {
    return static_cast<long long>(copy.vertex_count -
                                  hypergraph_components(copy, a));
  });
}

Polymatroid graphic_oracle(const GraphInstance& g) {
  validate(g);
  require_oracle_capacity(g.edges.size());
  GraphInstance copy = g;
  return Polymatroid(static_cast<int>(g.edges.size()), [copy](Subset a) {
    return static_cast<long long>(copy.vertex_count - graph_components(copy, a));
  });
}

Polymatroid cographic_oracle(const GraphInstance& g) {
  validate(g);
  require_oracle_capacity(g.edges.size());
  GraphInstance copy = g;
  Subset all = full_mask(static_cast<int>(g.edges.size()));
  int full_components = graph_components(g, all);
  if (full_components != 1) {
    throw std::invalid_argument("cographic oracle requires a connected graph");
  }
  return Polymatroid(static_cast<int>(g.edges.size()),
                     [copy, all, full_components](Subset a) {
                       return static_cast<long long>(
                           popcount(a) + full_components -
                           graph_components(copy, all & ~a));
                     });
}

Polymatroid linear_oracle(const MatrixInstance& m) {
  validate(m);
  require_oracle_capacity(m.rows.size());
  MatrixInstance copy = m;
  return Polymatroid(static_cast<int>(m.rows.size()),
                     [copy](Subset a) { return gf_rank(copy, a); });
}

HypergraphInstance setcover_to_connectivity(const HypergraphInstance& h) {
  validate(h);
  HypergraphInstance out;
  out.vertex_count = h.vertex_count + 1;
  out.label = h.label.empty() ? "stretched" : h.label + "-stretched";
  int root = h.vertex_count;
  for (const auto& e : h.hyperedges) {
    auto stretched = e;
    stretched.push_back(root);
    out.hyperedges.push_back(std::move(stretched));
  }
  return out;
}

HypergraphInstance generate_random_hypergraph(std::uint64_t seed, int n, int m,
                                              int min_edge_size,
                                              int max_edge_size) {
  if (n <= 0 || m < 0 || min_edge_size < 1 || max_edge_size < min_edge_size ||
      max_edge_size > n) {
    throw std::invalid_argument("bad random hypergraph parameters");
  }
  RngStream rng(seed);
  HypergraphInstance h;
  h.vertex_count = n;
  h.label = "random-" + std::to_string(seed);
  for (int i = 0; i < m; ++i) {
    int size = static_cast<int>(rng.range(min_edge_size, max_edge_size));
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> edge;
    for (int j = 0; j < size; ++j) {
      int idx = static_cast<int>(rng.below(pool.size()));
      edge.push_back(pool[idx]);
      pool.erase(pool.begin() + idx);
    }
    std::sort(edge.begin(), edge.end());
    h.hyperedges.push_back(std::move(edge));
  }
  return h;
}

GraphInstance generate_parallel_path(const std::vector<int>& segments) {
  if (segments.empty()) throw std::invalid_argument("segments must be non-empty");
  for (int k : segments) {
    if (k <= 0) throw std::invalid_argument("segment multiplicity must be positive");
  }
  GraphInstance g;
  g.vertex_count = static_cast<int>(segments.size()) + 1;
  g.label = "parallel-path";
  std::vector<int> remaining = segments;
  bool any = true;
  while (any) {
    any = false;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (remaining[i] > 0) {
        g.edges.emplace_back(static_cast<int>(i), static_cast<int>(i) + 1);
        --remaining[i];
        any = true;
      }
    }
  }
  validate(g);
  return g;
}

int Instance::element_count() const {
  if (kind == "coverage" || kind == "connectivity") {
    return static_cast<int>(hypergraph.hyperedges.size());
  }
  if (kind == "graphic" || kind == "cographic") {
    return static_cast<int>(graph.edges.size());
  }
  if (kind == "linear_gfp") return static_cast<int>(matrix.rows.size());
  throw std::invalid_argument("unknown instance kind: " + kind);
}

long long subset_rank(const Instance& inst, const std::vector<int>& elements) {
  std::size_t m = static_cast<std::size_t>(inst.element_count());
  std::vector<char> selected = indices_to_selected(elements, m);
  if (inst.kind == "coverage") {
    std::vector<char> covered(inst.hypergraph.vertex_count, 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!selected[i]) continue;
      for (int v : inst.hypergraph.hyperedges[i]) covered[v] = 1;
    }
    return std::count(covered.begin(), covered.end(), 1);
  }
  if (inst.kind == "connectivity") {
    return inst.hypergraph.vertex_count -
           hypergraph_components(inst.hypergraph, selected);
  }
  if (inst.kind == "graphic") {
    return inst.graph.vertex_count - graph_components(inst.graph, selected);
  }
  if (inst.kind == "cographic") {
    std::vector<char> all(m, 1);
    std::vector<char> complement(m);
    for (std::size_t i = 0; i < m; ++i) complement[i] = selected[i] ? 0 : 1;
    return std::count(selected.begin(), selected.end(), 1) +
           graph_components(inst.graph, all) -
           graph_components(inst.graph, complement);
  }
  if (inst.kind == "linear_gfp") return gf_rank(inst.matrix, selected);
  throw std::invalid_argument("unknown instance kind: " + inst.kind);
}

long long instance_rank(const Instance& inst) {
  std::vector<int> all(inst.element_count());
  std::iota(all.begin(), all.end(), 0);
  return subset_rank(inst, all);
}

Polymatroid Instance::oracle() const {
  if (kind == "coverage") return coverage_oracle(hypergraph);
  if (kind == "connectivity") return connectivity_oracle(hypergraph);
  if (kind == "graphic") return graphic_oracle(graph);
  if (kind == "cographic") return cographic_oracle(graph);
  if (kind == "linear_gfp") return linear_oracle(matrix);
  throw std::invalid_argument("unknown instance kind: " + kind);
}

namespace {

using nlohmann::json;

void reject_unknown_fields(const json& j,
                           const std::vector<std::string>& allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
      throw std::invalid_argument("unknown instance field: " + it.key());
    }
  }
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
  json j = json::parse(text);
  Instance inst;
  inst.kind = j.at("kind").get<std::string>();
  inst.label = j.value("label", "");
  if (inst.kind == "coverage" || inst.kind == "connectivity") {
    reject_unknown_fields(j, {"kind", "vertex_count", "edges", "label"});
    inst.hypergraph.vertex_count = j.at("vertex_count").get<int>();
    inst.hypergraph.hyperedges =
        j.at("edges").get<std::vector<std::vector<int>>>();
    inst.hypergraph.label = inst.label;
    validate(inst.hypergraph);
  } else if (inst.kind == "graphic" || inst.kind == "cographic") {
    reject_unknown_fields(j, {"kind", "vertex_count", "edges", "label"});
    inst.graph.vertex_count = j.at("vertex_count").get<int>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw std::invalid_argument("graph edge must be a [u, v] pair");
      }
      inst.graph.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    inst.graph.label = inst.label;
    validate(inst.graph);
  } else if (inst.kind == "linear_gfp") {
    reject_unknown_fields(j, {"kind", "dimension", "modulus", "rows", "label"});
    inst.matrix.dimension = j.at("dimension").get<int>();
    inst.matrix.modulus = j.at("modulus").get<long long>();
    inst.matrix.rows =
        j.at("rows").get<std::vector<std::vector<long long>>>();
    inst.matrix.label = inst.label;
    validate(inst.matrix);
  } else {
    throw std::invalid_argument("unknown instance kind: " + inst.kind);
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance_json(buf.str());
}

std::string instance_to_json(const Instance& inst) {
  json j;
  j["kind"] = inst.kind;
  j["label"] = inst.label;
  if (inst.kind == "coverage" || inst.kind == "connectivity") {
    j["vertex_count"] = inst.hypergraph.vertex_count;
    j["edges"] = inst.hypergraph.hyperedges;
  } else if (inst.kind == "graphic" || inst.kind == "cographic") {
    j["vertex_count"] = inst.graph.vertex_count;
    auto edges = json::array();
    for (const auto& [u, v] : inst.graph.edges) edges.push_back({u, v});
    j["edges"] = edges;
  } else {
    j["dimension"] = inst.matrix.dimension;
    j["modulus"] = inst.matrix.modulus;
    j["rows"] = inst.matrix.rows;
  }
  return j.dump(2);
}

Instance as_instance(const HypergraphInstance& h, const std::string& kind) {
  Instance inst;
  inst.kind = kind;
  inst.hypergraph = h;
  inst.label = h.label;
  return inst;
}

Instance as_instance(const GraphInstance& g, const std::string& kind) {
  Instance inst;
  inst.kind = kind;
  inst.graph = g;
  inst.label = g.label;
  return inst;
}

Instance as_instance(const MatrixInstance& m) {
  Instance inst;
  inst.kind = "linear_gfp";
  inst.matrix = m;
  inst.label = m.label;
  return inst;
}

}  // namespace basepack
