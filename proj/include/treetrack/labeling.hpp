#pragma once

#include <cstdint>
#include <vector>

#include "treetrack/rng.hpp"
#include "treetrack/tree.hpp"

namespace treetrack {

/// Bijective label -> vertex assignment with its inverse kept in sync.
struct TrueLabeling {
  std::vector<VertexId> label_to_vertex;
  std::vector<LabelId> vertex_to_label;

  static TrueLabeling identity(int n);
  /// Validates that the map is a permutation.
  static TrueLabeling from_map(std::vector<VertexId> label_to_vertex);

  int n() const { return static_cast<int>(label_to_vertex.size()); }
  VertexId vertex_of(LabelId l) const { return label_to_vertex[l]; }
  LabelId label_at(VertexId v) const { return vertex_to_label[v]; }

  /// Exchanges the labels at two vertices (no adjacency check here).
  void swap_vertices(VertexId u, VertexId v) {
    LabelId a = vertex_to_label[u], b = vertex_to_label[v];
    vertex_to_label[u] = b;
    vertex_to_label[v] = a;
    label_to_vertex[a] = v;
    label_to_vertex[b] = u;
  }

  bool operator==(const TrueLabeling& o) const {
    return label_to_vertex == o.label_to_vertex;
  }
};

/// Label -> vertex map with no bijectivity requirement; tracks per-vertex
/// occupancy counts only (no per-vertex label sets).
struct HypothesisLabeling {
  std::vector<VertexId> label_to_vertex;
  std::vector<int32_t> occupancy;

  static HypothesisLabeling from_map(int n_vertices,
                                     std::vector<VertexId> label_to_vertex);

  int n_labels() const { return static_cast<int>(label_to_vertex.size()); }
  VertexId vertex_of(LabelId l) const { return label_to_vertex[l]; }

  void move(LabelId l, VertexId to) {
    --occupancy[label_to_vertex[l]];
    ++occupancy[to];
    label_to_vertex[l] = to;
  }
};

HypothesisLabeling make_hypothesis_exact(const TrueLabeling& truth);
/// Places each label at vertex n-1 - M_T(l). On a path with the identity
/// truth this is the reversed arrangement with total distance ~n^2/2.
HypothesisLabeling make_hypothesis_reversed(const TrueLabeling& truth);
HypothesisLabeling make_hypothesis_all_at(int n, VertexId v);
HypothesisLabeling make_hypothesis_uniform_random(int n, Rng& rng);

/// Per-label tree distances between true and hypothesized positions plus
/// their running sum.
struct DistanceState {
  std::vector<int32_t> per_label;
  int64_t total = 0;
};

DistanceState compute_distance(const Tree& t, const TrueLabeling& truth,
                               const HypothesisLabeling& hyp);

/// Swaps the labels of adjacent vertices u,v in the truth and updates the
/// two affected per-label distances (each changes by exactly 1).
/// Returns the change in total distance (-2, 0, or +2).
int apply_true_swap(const Tree& t, TrueLabeling& truth, VertexId u, VertexId v,
                    const HypothesisLabeling& hyp, DistanceState& state);

/// Moves a hypothesized label to an adjacent vertex and updates its distance
/// (changes by exactly 1). Returns the change in total distance (-1 or +1).
int apply_hypothesis_move(const Tree& t, const TrueLabeling& truth,
                          HypothesisLabeling& hyp, LabelId l, VertexId to,
                          DistanceState& state);

int32_t max_vertex_load(const HypothesisLabeling& hyp);

}  // namespace treetrack
