#include "treetrack/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace treetrack {

TrueLabeling TrueLabeling::identity(int n) {
  TrueLabeling t;
  t.label_to_vertex.resize(n);
  t.vertex_to_label.resize(n);
  for (int i = 0; i < n; ++i) {
    t.label_to_vertex[i] = i;
    t.vertex_to_label[i] = i;
  }
  return t;
}

TrueLabeling TrueLabeling::from_map(std::vector<VertexId> label_to_vertex) {
  const int n = static_cast<int>(label_to_vertex.size());
  TrueLabeling t;
  t.label_to_vertex = std::move(label_to_vertex);
  t.vertex_to_label.assign(n, -1);
  for (LabelId l = 0; l < n; ++l) {
    VertexId v = t.label_to_vertex[l];
    if (v < 0 || v >= n)
      throw std::invalid_argument("label " + std::to_string(l) +
                                  " mapped outside vertex range");
    if (t.vertex_to_label[v] != -1)
      throw std::invalid_argument("not a permutation: vertex " +
                                  std::to_string(v) + " assigned twice");
    t.vertex_to_label[v] = l;
  }
  return t;
}

HypothesisLabeling HypothesisLabeling::from_map(
    int n_vertices, std::vector<VertexId> label_to_vertex) {
  HypothesisLabeling h;
  h.occupancy.assign(n_vertices, 0);
  for (VertexId v : label_to_vertex) {
    if (v < 0 || v >= n_vertices)
      throw std::invalid_argument("hypothesis vertex out of range");
    ++h.occupancy[v];
  }
  h.label_to_vertex = std::move(label_to_vertex);
  return h;
}

HypothesisLabeling make_hypothesis_exact(const TrueLabeling& truth) {
  return HypothesisLabeling::from_map(truth.n(), truth.label_to_vertex);
}

HypothesisLabeling make_hypothesis_reversed(const TrueLabeling& truth) {
  const int n = truth.n();
  std::vector<VertexId> map(n);
  for (LabelId l = 0; l < n; ++l) map[l] = n - 1 - truth.vertex_of(l);
  return HypothesisLabeling::from_map(n, std::move(map));
}

HypothesisLabeling make_hypothesis_all_at(int n, VertexId v) {
  return HypothesisLabeling::from_map(n, std::vector<VertexId>(n, v));
}

HypothesisLabeling make_hypothesis_uniform_random(int n, Rng& rng) {
  std::vector<VertexId> map(n);
  for (LabelId l = 0; l < n; ++l)
    map[l] = static_cast<VertexId>(rng.below(static_cast<uint64_t>(n)));
  return HypothesisLabeling::from_map(n, std::move(map));
}

DistanceState compute_distance(const Tree& t, const TrueLabeling& truth,
                               const HypothesisLabeling& hyp) {
  if (truth.n() != hyp.n_labels())
    throw std::invalid_argument("labeling size mismatch");
  DistanceState s;
  s.per_label.resize(truth.n());
  for (LabelId l = 0; l < truth.n(); ++l) {
    s.per_label[l] = t.distance(truth.vertex_of(l), hyp.vertex_of(l));
    s.total += s.per_label[l];
  }
  return s;
}

int apply_true_swap(const Tree& t, TrueLabeling& truth, VertexId u, VertexId v,
                    const HypothesisLabeling& hyp, DistanceState& state) {
  if (!t.is_edge(u, v))
    throw std::invalid_argument("true swap requires a tree edge");
  truth.swap_vertices(u, v);
  int delta = 0;
  for (LabelId l : {truth.label_at(u), truth.label_at(v)}) {
    int32_t d = t.distance(truth.vertex_of(l), hyp.vertex_of(l));
    int32_t step = d - state.per_label[l];
    if (step != 1 && step != -1)
      throw std::logic_error("swap changed a label distance by " +
                             std::to_string(step));
    state.per_label[l] = d;
    state.total += step;
    delta += step;
  }
  return delta;
}

int apply_hypothesis_move(const Tree& t, const TrueLabeling& truth,
                          HypothesisLabeling& hyp, LabelId l, VertexId to,
                          DistanceState& state) {
  if (!t.is_edge(hyp.vertex_of(l), to))
    throw std::invalid_argument("hypothesis move must follow a tree edge");
  hyp.move(l, to);
  int32_t d = t.distance(truth.vertex_of(l), to);
  int32_t step = d - state.per_label[l];
  if (step != 1 && step != -1)
    throw std::logic_error("move changed a label distance by " +
                           std::to_string(step));
  state.per_label[l] = d;
  state.total += step;
  return step;
}

int32_t max_vertex_load(const HypothesisLabeling& hyp) {
  int32_t best = 0;
  for (int32_t c : hyp.occupancy) best = std::max(best, c);
  return best;
}

}  // namespace treetrack
