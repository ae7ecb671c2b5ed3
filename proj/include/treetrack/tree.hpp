#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace treetrack {

using VertexId = int32_t;
using LabelId = int32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Fixed undirected tree rooted at vertex 0, with depth and binary-lifting
/// ancestor tables so distance and first-hop queries run in O(log n).
/// Immutable after construction; all queries are const and reentrant.
class Tree {
 public:
  /// Builds from an edge list on vertices 0..n-1 (n inferred from the
  /// largest endpoint). Rejects self-loops, duplicate edges, and input
  /// that is not a single connected tree.
  static Tree from_edges(const std::vector<Edge>& edges);

  int n() const { return n_; }
  int max_degree() const { return max_degree_; }
  VertexId root() const { return 0; }

  VertexId parent(VertexId v) const { return parent_[v]; }
  int depth(VertexId v) const { return depth_[v]; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    return parent_[u] == v || parent_[v] == u;
  }

  VertexId lca(VertexId u, VertexId v) const {
    if (depth_[u] < depth_[v]) std::swap(u, v);
    u = ancestor_at_depth(u, depth_[v]);
    if (u == v) return u;
    for (int k = levels_ - 1; k >= 0; --k) {
      if (up_[k][u] != up_[k][v]) {
        u = up_[k][u];
        v = up_[k][v];
      }
    }
    return parent_[u];
  }

  /// Ancestor of v at the given depth (requires depth <= depth(v)).
  VertexId ancestor_at_depth(VertexId v, int target_depth) const {
    int climb = depth_[v] - target_depth;
    for (int k = 0; climb != 0; ++k, climb >>= 1) {
      if (climb & 1) v = up_[k][v];
    }
    return v;
  }

  /// Number of edges on the path between u and v.
  int distance(VertexId u, VertexId v) const {
    VertexId a = lca(u, v);
    return depth_[u] + depth_[v] - 2 * depth_[a];
  }

  /// First vertex after u on the unique path from u to w. Requires u != w.
  /// If w lies in u's subtree this is the ancestor of w one level below u,
  /// otherwise it is u's parent.
  VertexId first_hop(VertexId u, VertexId w) const;

 private:
  Tree() = default;

  int n_ = 0;
  int max_degree_ = 0;
  int levels_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<Edge> edges_;
  std::vector<VertexId> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<VertexId>> up_;  // up_[k][v] = 2^k-th ancestor
};

Tree gen_path(int n);
Tree gen_balanced(int n, int arity);
Tree gen_random_bounded(int n, int max_degree, uint64_t seed);

/// Wings tree: a center vertex, beta wing paths of alpha vertices each, and
/// a tail chain of alpha vertices. n = alpha*beta + alpha + 1.
struct WingsLayout {
  int alpha = 0;
  int beta = 0;
  VertexId center = 0;
  std::vector<std::vector<VertexId>> wings;  // each wing ordered center-out
  std::vector<VertexId> tails;               // chain ordered center-out
};

struct WingsTree {
  Tree tree;
  WingsLayout layout;
};

WingsTree gen_wings(int alpha, int beta);

}  // namespace treetrack
