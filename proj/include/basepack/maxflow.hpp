#pragma once

#include <queue>
#include <vector>

namespace basepack {

/// Unit/small-capacity max flow via Dinic's algorithm. Arcs are kept and
/// scanned in insertion order, so the augmentation sequence (and therefore
/// any trace built on top of it) is deterministic.
class MaxFlow {
 public:
  explicit MaxFlow(int node_count) : head_(node_count, -1) {}

  void add_edge(int from, int to, long long capacity) {
    arcs_.push_back({to, head_[from], capacity});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  long long run(int source, int sink) {
    long long flow = 0;
    while (bfs(source, sink)) {
      iter_ = head_;
      while (long long pushed = dfs(source, sink, kInf)) flow += pushed;
    }
    return flow;
  }

 private:
  static constexpr long long kInf = 1LL << 60;

  struct Arc {
    int to;
    int next;
    long long cap;
  };

  bool bfs(int source, int sink) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  long long dfs(int u, int sink, long long limit) {
    if (u == sink) return limit;
    for (int& a = iter_[u]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap > 0 && level_[arc.to] == level_[u] + 1) {
        long long pushed = dfs(arc.to, sink, std::min(limit, arc.cap));
        if (pushed > 0) {
          arc.cap -= pushed;
          arcs_[a ^ 1].cap += pushed;
          return pushed;
        }
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace basepack
