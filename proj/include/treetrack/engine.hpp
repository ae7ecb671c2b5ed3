#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treetrack/evolver.hpp"
#include "treetrack/labeling.hpp"
#include "treetrack/tree.hpp"

namespace treetrack {

/// Exact rational speedup c = p/q >= 1, gcd-reduced. The evolver's k-th
/// action happens at time k*p/q; the algorithm acts at integer times.
struct Speedup {
  int64_t p = 1;
  int64_t q = 1;

  static Speedup make(int64_t p, int64_t q);
  /// Accepts "p/q" or a bare integer.
  static Speedup parse(const std::string& text);
  double value() const { return static_cast<double>(p) / static_cast<double>(q); }
};

/// Round-robin tracker position: which label the inner loop is working on
/// and how many full passes have completed. A step is one oracle query
/// followed by either a move or an advance to the next label.
struct TrackerState {
  LabelId current_label = 0;
  int64_t iteration = 1;
};

struct IterationRecord {
  int64_t j = 0;              // iteration number, 1-based
  int64_t D = 0;              // total distance at iteration start
  int64_t moves = 0;          // label moves during the iteration (A_j)
  int64_t steps = 0;          // algorithm steps during the iteration (dt_j)
  int64_t evolver_steps = 0;  // evolver swaps during the iteration
  int32_t max_load = 0;       // hypothesis max occupancy at iteration end
  int64_t step_index = 0;     // cumulative algorithm steps at iteration end
};

struct RunLimits {
  std::optional<int64_t> iterations;
  /// Inclusive event-time bound, scaled by q (an event at time T runs iff
  /// T*q <= scaled_time). Lets a caller stop exactly at a script's end time
  /// m*p/q by passing m*p.
  std::optional<int64_t> scaled_time;
};

struct RunResult {
  std::vector<IterationRecord> records;
  int64_t final_D = 0;
  int64_t max_intra_iteration_D = 0;
  int64_t algorithm_steps = 0;
  int64_t evolver_swaps = 0;
  bool script_exhausted = false;  // stopped by a halting script
  TrueLabeling truth;
  HypothesisLabeling hypothesis;
  TrackerState tracker;

  double steady_state_mean_D() const;  // mean D_j over the last 25% of records
  int32_t max_load_over_run() const;
};

/// Interleaves tracker and evolver on the exact rational schedule (ties go
/// to the evolver) until a limit is reached. Maintains the distance state
/// incrementally and audits it against a full recomputation every
/// audit_every algorithm steps (default 10n).
RunResult run_simulation(const Tree& tree, TrueLabeling truth,
                         HypothesisLabeling hyp, Evolver& evolver, Speedup c,
                         const RunLimits& limits, int64_t audit_every = 0);

struct LemmaViolation {
  int64_t j;
  int64_t lhs;
  int64_t rhs;
};

struct LemmaReport {
  std::vector<LemmaViolation> identity;    // steps != n + moves
  std::vector<LemmaViolation> inequality;  // dt_j below the c/(2+c) bound
  bool ok() const { return identity.empty() && inequality.empty(); }
};

/// Checks dt_j = n + A_j exactly and
/// dt_j >= (c/(2+c))(D_j + n) - 2 (slack for rational-schedule rounding)
/// for every record, in integer arithmetic.
LemmaReport check_lemma_bounds(const std::vector<IterationRecord>& records,
                               int n, Speedup c);

int64_t default_iteration_budget(int n);  // max(50, 4*ceil(log2 n))

}  // namespace treetrack
