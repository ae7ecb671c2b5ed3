#include "treetrack/evolver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace treetrack {

void apply_script(const Tree& t, const SwapScript& script,
                  TrueLabeling& truth) {
  for (const auto& [u, v] : script.swaps) {
    if (!t.is_edge(u, v))
      throw std::invalid_argument("script entry " + std::to_string(u) + " " +
                                  std::to_string(v) + " is not a tree edge");
    truth.swap_vertices(u, v);
  }
}

SwapScript reversed(const SwapScript& script) {
  SwapScript r;
  r.swaps.assign(script.swaps.rbegin(), script.swaps.rend());
  return r;
}

EvolverStep UniformRandomEvolver::step(const Tree& t, const TrueLabeling&,
                                       const HypothesisLabeling&) {
  const auto& e = t.edges()[rng_.below(t.edges().size())];
  return {EvolverStep::Kind::Swap, e.first, e.second};
}

EvolverStep ScriptedEvolver::step(const Tree&, const TrueLabeling&,
                                  const HypothesisLabeling&) {
  if (next_ >= script_.length()) {
    return {policy_ == ExhaustedPolicy::Hold ? EvolverStep::Kind::Hold
                                             : EvolverStep::Kind::Exhausted};
  }
  const auto& e = script_.swaps[next_++];
  return {EvolverStep::Kind::Swap, e.first, e.second};
}

EvolverStep GreedyAdversaryEvolver::step(const Tree& t,
                                         const TrueLabeling& truth,
                                         const HypothesisLabeling& hyp) {
  const auto& edges = t.edges();
  const int m = static_cast<int>(edges.size());
  const int k = std::min(sample_size_, m);
  if (static_cast<int>(pool_.size()) != m) {
    pool_.resize(m);
    std::iota(pool_.begin(), pool_.end(), 0);
  }
  // partial Fisher-Yates: k distinct candidates
  for (int i = 0; i < k; ++i)
    std::swap(pool_[i], pool_[i + rng_.below(static_cast<uint64_t>(m - i))]);

  int best_idx = pool_[0];
  int best_gain = -3;
  for (int i = 0; i < k; ++i) {
    const auto& [u, v] = edges[pool_[i]];
    LabelId a = truth.label_at(u), b = truth.label_at(v);
    int gain = t.distance(v, hyp.vertex_of(a)) - t.distance(u, hyp.vertex_of(a)) +
               t.distance(u, hyp.vertex_of(b)) - t.distance(v, hyp.vertex_of(b));
    if (gain > best_gain) {
      best_gain = gain;
      best_idx = pool_[i];
    }
  }
  return {EvolverStep::Kind::Swap, edges[best_idx].first,
          edges[best_idx].second};
}

std::unique_ptr<Evolver> make_evolver(const EvolverKind& kind) {
  if (const auto* u = std::get_if<UniformRandomSpec>(&kind))
    return std::make_unique<UniformRandomEvolver>(u->seed);
  if (const auto* s = std::get_if<ScriptedSpec>(&kind))
    return std::make_unique<ScriptedEvolver>(s->script, s->policy);
  const auto& g = std::get<GreedyAdversarySpec>(kind);
  return std::make_unique<GreedyAdversaryEvolver>(g.seed, g.sample_size);
}

SwapScript make_reversal_script(const Tree& t) {
  const int n = t.n();
  if (t.max_degree() > 2)
    throw std::invalid_argument("reversal script requires a path tree");
  // order vertices along the path, starting from the lowest-id endpoint
  VertexId start = -1;
  for (VertexId v = 0; v < n; ++v)
    if (t.neighbors(v).size() == 1) {
      start = v;
      break;
    }
  std::vector<VertexId> seq;
  seq.reserve(n);
  VertexId prev = -1, cur = start;
  while (true) {
    seq.push_back(cur);
    VertexId next = -1;
    for (VertexId w : t.neighbors(cur))
      if (w != prev) next = w;
    if (next == -1) break;
    prev = cur;
    cur = next;
  }
  SwapScript s;
  s.swaps.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int pass = 0; pass < n - 1; ++pass)
    for (int i = 0; i + 1 < n - pass; ++i)
      s.swaps.push_back({seq[i], seq[i + 1]});
  return s;
}

int64_t wings_swap_budget(int alpha, int beta) {
  const int64_t a = alpha, b = beta;
  return (b + 1) * (a * (a + 1) / 2 + 2 * a);
}

TrueLabeling wings_shifted_labeling(const WingsTree& wt) {
  const auto& lay = wt.layout;
  TrueLabeling target = TrueLabeling::identity(wt.tree.n());
  std::vector<VertexId> map = target.label_to_vertex;
  for (int i = 0; i < lay.beta; ++i) {
    const auto& src = lay.wings[i];
    const auto& dst = lay.wings[(i + 1) % lay.beta];
    for (int j = 0; j < lay.alpha; ++j) map[src[j]] = dst[j];
  }
  return TrueLabeling::from_map(std::move(map));
}

WingsScript make_wings_script(const WingsTree& wt) {
  const auto& lay = wt.layout;
  const int alpha = lay.alpha, beta = lay.beta;
  const VertexId c = lay.center;
  WingsScript out;
  out.budget = wings_swap_budget(alpha, beta);
  out.script.swaps.reserve(static_cast<size_t>(beta) * alpha * alpha + alpha);

  auto ride = [&out](std::vector<VertexId> path) {
    for (size_t i = 0; i + 1 < path.size(); ++i)
      out.script.swaps.push_back({path[i], path[i + 1]});
  };
  auto down_to = [&](int wing, int depth) {
    std::vector<VertexId> p = {c};
    for (int d = 0; d < depth; ++d) p.push_back(lay.wings[wing][d]);
    ride(std::move(p));
  };
  auto up_from = [&](int wing, int depth) {
    std::vector<VertexId> p;
    for (int d = depth - 1; d >= 0; --d) p.push_back(lay.wings[wing][d]);
    p.push_back(c);
    ride(std::move(p));
  };

  // Rotate one depth layer at a time, shallow layers first. Carrying the
  // layer-j token of wing 0 to the center, dropping it at depth j of wing 1,
  // lifting wing 1's displaced layer-j token, and so on around the fan
  // returns every bystander to its slot once the final drop lands in wing 0.
  for (int j = 1; j <= alpha; ++j) {
    up_from(0, j);
    for (int i = 1; i < beta; ++i) {
      down_to(i, j);
      up_from(i, j - 1);
    }
    down_to(0, j);
  }

  out.target = wings_shifted_labeling(wt);
  TrueLabeling check = TrueLabeling::identity(wt.tree.n());
  apply_script(wt.tree, out.script, check);
  if (!(check == out.target))
    throw std::logic_error("wings script failed validation");
  return out;
}

}  // namespace treetrack
