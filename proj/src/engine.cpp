#include "treetrack/engine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "treetrack/oracle.hpp"

namespace treetrack {

Speedup Speedup::make(int64_t p, int64_t q) {
  if (p <= 0 || q <= 0) throw std::invalid_argument("speedup must be positive");
  if (p < q) throw std::invalid_argument("speedup must satisfy c >= 1");
  int64_t g = std::gcd(p, q);
  return Speedup{p / g, q / g};
}

Speedup Speedup::parse(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      size_t used = 0;
      int64_t p = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("");
      return make(p, 1);
    }
    size_t used_p = 0, used_q = 0;
    int64_t p = std::stoll(text.substr(0, slash), &used_p);
    int64_t q = std::stoll(text.substr(slash + 1), &used_q);
    if (used_p != slash || used_q != text.size() - slash - 1)
      throw std::invalid_argument("");
    return make(p, q);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("speedup must be an integer ratio p/q with c >= 1, got '" +
                                text + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("speedup out of range: '" + text + "'");
  }
}

double RunResult::steady_state_mean_D() const {
  if (records.empty()) return static_cast<double>(final_D);
  size_t tail = std::max<size_t>(1, records.size() / 4);
  double sum = 0;
  for (size_t i = records.size() - tail; i < records.size(); ++i)
    sum += static_cast<double>(records[i].D);
  return sum / static_cast<double>(tail);
}

int32_t RunResult::max_load_over_run() const {
  int32_t best = 0;
  for (const auto& r : records) best = std::max(best, r.max_load);
  return best;
}

int64_t default_iteration_budget(int n) {
  int64_t log2n = 0;
  while ((1ll << log2n) < n) ++log2n;
  return std::max<int64_t>(50, 4 * log2n);
}

RunResult run_simulation(const Tree& tree, TrueLabeling truth,
                         HypothesisLabeling hyp, Evolver& evolver, Speedup c,
                         const RunLimits& limits, int64_t audit_every) {
  const int n = tree.n();
  if (truth.n() != n || hyp.n_labels() != n)
    throw std::invalid_argument("labeling does not match tree size");
  if (!limits.iterations && !limits.scaled_time)
    throw std::invalid_argument("run needs an iteration or time limit");
  if (audit_every <= 0) audit_every = 10ll * n;

  DistanceState state = compute_distance(tree, truth, hyp);
  const int64_t initial_D = state.total;
  int64_t removed_by_algorithm = 0;
  int64_t evolver_delta = 0;

  RunResult out;
  out.max_intra_iteration_D = state.total;

  TrackerState tracker;
  int64_t iter_start_D = state.total;
  int64_t iter_moves = 0, iter_steps = 0, iter_evolver = 0;

  int64_t alg_done = 0;     // algorithm steps taken; next acts at time alg_done+1
  int64_t evolver_done = 0; // evolver actions taken; next at (evolver_done+1)*p/q

  auto audit = [&]() {
    int64_t fresh = 0;
    for (LabelId l = 0; l < n; ++l)
      fresh += tree.distance(truth.vertex_of(l), hyp.vertex_of(l));
    if (fresh != state.total)
      throw std::logic_error("distance audit failed: incremental " +
                             std::to_string(state.total) + " vs recomputed " +
                             std::to_string(fresh));
    if (state.total != initial_D - removed_by_algorithm + evolver_delta)
      throw std::logic_error("distance ledger failed");
  };

  while (true) {
    if (limits.iterations && tracker.iteration > *limits.iterations) break;

    // next event: evolver k+1 at time (k+1)p/q vs algorithm at time a+1;
    // compare (k+1)p against (a+1)q exactly, evolver first on ties
    const int64_t evolver_time_scaled = (evolver_done + 1) * c.p;
    const int64_t alg_time_scaled = (alg_done + 1) * c.q;
    const bool evolver_turn = evolver_time_scaled <= alg_time_scaled;
    const int64_t event_time_scaled =
        evolver_turn ? evolver_time_scaled : alg_time_scaled;
    if (limits.scaled_time && event_time_scaled > *limits.scaled_time) break;

    if (evolver_turn) {
      EvolverStep s = evolver.step(tree, truth, hyp);
      ++evolver_done;
      if (s.kind == EvolverStep::Kind::Exhausted) {
        out.script_exhausted = true;
        break;
      }
      if (s.kind == EvolverStep::Kind::Swap) {
        evolver_delta += apply_true_swap(tree, truth, s.u, s.v, hyp, state);
        ++out.evolver_swaps;
        ++iter_evolver;
        out.max_intra_iteration_D =
            std::max(out.max_intra_iteration_D, state.total);
      }
      continue;
    }

    // one tracker step: query the oracle once, then move or advance
    ++alg_done;
    ++iter_steps;
    OracleAnswer ans =
        oracle_query(tree, truth, tracker.current_label, hyp.vertex_of(tracker.current_label));
    if (!ans.at_target) {
      int d = apply_hypothesis_move(tree, truth, hyp, tracker.current_label,
                                    ans.to, state);
      if (d != -1)
        throw std::logic_error("oracle-directed move changed distance by " +
                               std::to_string(d));
      ++removed_by_algorithm;
      ++iter_moves;
    } else {
      tracker.current_label = (tracker.current_label + 1) % n;
      if (tracker.current_label == 0) {
        // iteration boundary: the tracker wrapped past the last label
        IterationRecord rec;
        rec.j = tracker.iteration;
        rec.D = iter_start_D;
        rec.moves = iter_moves;
        rec.steps = iter_steps;
        rec.evolver_steps = iter_evolver;
        rec.max_load = max_vertex_load(hyp);
        rec.step_index = alg_done;
        if (rec.steps != n + rec.moves)
          throw std::logic_error("iteration step identity failed at j=" +
                                 std::to_string(rec.j));
        out.records.push_back(rec);
        ++tracker.iteration;
        iter_start_D = state.total;
        iter_moves = iter_steps = iter_evolver = 0;
      }
    }
    if (alg_done % audit_every == 0) audit();
  }

  audit();
  out.final_D = state.total;
  out.algorithm_steps = alg_done;
  out.truth = std::move(truth);
  out.hypothesis = std::move(hyp);
  out.tracker = tracker;
  return out;
}

LemmaReport check_lemma_bounds(const std::vector<IterationRecord>& records,
                               int n, Speedup c) {
  LemmaReport rep;
  for (const auto& r : records) {
    if (r.steps != n + r.moves)
      rep.identity.push_back({r.j, r.steps, n + r.moves});
    // dt_j >= (p/(2q+p))(D_j + n) - 2, cross-multiplied
    int64_t lhs = (r.steps + 2) * (2 * c.q + c.p);
    int64_t rhs = c.p * (r.D + n);
    if (lhs < rhs) rep.inequality.push_back({r.j, lhs, rhs});
  }
  return rep;
}

}  // namespace treetrack
