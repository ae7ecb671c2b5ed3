#include "treetrack/tree.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "treetrack/rng.hpp"

namespace treetrack {

Tree Tree::from_edges(const std::vector<Edge>& edges) {
  if (edges.empty()) throw std::invalid_argument("tree needs at least one edge");
  VertexId max_v = 0;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0) throw std::invalid_argument("negative vertex id");
    max_v = std::max({max_v, u, v});
  }
  const int n = max_v + 1;
  if (static_cast<int>(edges.size()) != n - 1)
    throw std::invalid_argument("expected n-1 edges, got " +
                                std::to_string(edges.size()) + " for n=" +
                                std::to_string(n));

  Tree t;
  t.n_ = n;
  t.adj_.resize(n);
  t.edges_ = edges;
  std::set<Edge> seen;
  for (const auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    Edge key = u < v ? Edge{u, v} : Edge{v, u};
    if (!seen.insert(key).second)
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
    t.adj_[u].push_back(v);
    t.adj_[v].push_back(u);
  }

  t.parent_.assign(n, -1);
  t.depth_.assign(n, 0);
  std::vector<VertexId> order;
  order.reserve(n);
  std::vector<char> visited(n, 0);
  std::queue<VertexId> q;
  q.push(0);
  visited[0] = 1;
  t.parent_[0] = 0;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    order.push_back(u);
    for (VertexId w : t.adj_[u]) {
      if (!visited[w]) {
        visited[w] = 1;
        t.parent_[w] = u;
        t.depth_[w] = t.depth_[u] + 1;
        q.push(w);
      }
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("edge list is disconnected");

  int max_depth = 0;
  for (VertexId v = 0; v < n; ++v) {
    max_depth = std::max(max_depth, t.depth_[v]);
    t.max_degree_ = std::max(t.max_degree_, static_cast<int>(t.adj_[v].size()));
  }
  t.levels_ = 1;
  while ((1 << t.levels_) <= max_depth) ++t.levels_;
  t.up_.assign(t.levels_, std::vector<VertexId>(n));
  t.up_[0] = t.parent_;
  for (int k = 1; k < t.levels_; ++k)
    for (VertexId v = 0; v < n; ++v) t.up_[k][v] = t.up_[k - 1][t.up_[k - 1][v]];
  return t;
}

VertexId Tree::first_hop(VertexId u, VertexId w) const {
  if (u == w) throw std::invalid_argument("first_hop requires distinct vertices");
  // w lies in u's subtree iff u is w's ancestor at depth(u)
  if (depth_[w] > depth_[u] && ancestor_at_depth(w, depth_[u]) == u)
    return ancestor_at_depth(w, depth_[u] + 1);
  return parent_[u];
}

Tree gen_path(int n) {
  if (n < 2) throw std::invalid_argument("gen_path: n must be >= 2");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Tree::from_edges(edges);
}

Tree gen_balanced(int n, int arity) {
  if (n < 2) throw std::invalid_argument("gen_balanced: n must be >= 2");
  if (arity < 1) throw std::invalid_argument("gen_balanced: arity must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (VertexId v = 1; v < n; ++v) edges.push_back({(v - 1) / arity, v});
  return Tree::from_edges(edges);
}

Tree gen_random_bounded(int n, int max_degree, uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen_random_bounded: n must be >= 2");
  if (max_degree < 2)
    throw std::invalid_argument("gen_random_bounded: max_degree must be >= 2");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::vector<int> degree(n, 0);
  // vertices still below the degree cap, in arbitrary (deterministic) order
  std::vector<VertexId> open = {0};
  for (VertexId v = 1; v < n; ++v) {
    size_t idx = rng.below(open.size());
    VertexId u = open[idx];
    edges.push_back({u, v});
    if (++degree[u] == max_degree) {
      open[idx] = open.back();
      open.pop_back();
    }
    degree[v] = 1;
    if (max_degree > 1) open.push_back(v);
  }
  return Tree::from_edges(edges);
}

WingsTree gen_wings(int alpha, int beta) {
  if (alpha < 1) throw std::invalid_argument("gen_wings: alpha must be >= 1");
  if (beta < 2) throw std::invalid_argument("gen_wings: beta must be >= 2");
  WingsLayout layout;
  layout.alpha = alpha;
  layout.beta = beta;
  layout.center = 0;
  std::vector<Edge> edges;
  layout.wings.resize(beta);
  for (int i = 0; i < beta; ++i) {
    auto& wing = layout.wings[i];
    wing.resize(alpha);
    for (int j = 0; j < alpha; ++j) wing[j] = 1 + i * alpha + j;
    edges.push_back({layout.center, wing[0]});
    for (int j = 0; j + 1 < alpha; ++j) edges.push_back({wing[j], wing[j + 1]});
  }
  layout.tails.resize(alpha);
  for (int d = 0; d < alpha; ++d) layout.tails[d] = 1 + beta * alpha + d;
  edges.push_back({layout.center, layout.tails[0]});
  for (int d = 0; d + 1 < alpha; ++d)
    edges.push_back({layout.tails[d], layout.tails[d + 1]});
  return WingsTree{Tree::from_edges(edges), std::move(layout)};
}

}  // namespace treetrack
