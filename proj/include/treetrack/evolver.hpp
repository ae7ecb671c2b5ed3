#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "treetrack/labeling.hpp"
#include "treetrack/rng.hpp"
#include "treetrack/tree.hpp"

namespace treetrack {

/// Ordered sequence of adjacent-vertex swaps.
struct SwapScript {
  std::vector<Edge> swaps;
  int64_t length() const { return static_cast<int64_t>(swaps.size()); }
};

/// Applies every swap in order; throws if any entry is not a tree edge.
void apply_script(const Tree& t, const SwapScript& script, TrueLabeling& truth);
SwapScript reversed(const SwapScript& script);

enum class ExhaustedPolicy { Hold, Halt };

struct EvolverStep {
  enum class Kind { Swap, Hold, Exhausted };
  Kind kind;
  VertexId u = -1;
  VertexId v = -1;
};

/// One evolver instance drives one simulation. Implementations may read both
/// labelings; only the adversary actually does.
class Evolver {
 public:
  virtual ~Evolver() = default;
  virtual EvolverStep step(const Tree& t, const TrueLabeling& truth,
                           const HypothesisLabeling& hyp) = 0;
};

/// Picks one of the n-1 tree edges uniformly at random each step.
class UniformRandomEvolver : public Evolver {
 public:
  explicit UniformRandomEvolver(uint64_t seed) : rng_(seed) {}
  EvolverStep step(const Tree& t, const TrueLabeling&,
                   const HypothesisLabeling&) override;

 private:
  Rng rng_;
};

/// Replays a fixed swap sequence; on exhaustion either holds (no-op steps)
/// or signals completion.
class ScriptedEvolver : public Evolver {
 public:
  ScriptedEvolver(SwapScript script, ExhaustedPolicy policy)
      : script_(std::move(script)), policy_(policy) {}
  EvolverStep step(const Tree& t, const TrueLabeling&,
                   const HypothesisLabeling&) override;
  int64_t consumed() const { return next_; }

 private:
  SwapScript script_;
  ExhaustedPolicy policy_;
  int64_t next_ = 0;
};

/// Samples candidate edges each step and swaps the one that increases the
/// total distance most.
class GreedyAdversaryEvolver : public Evolver {
 public:
  GreedyAdversaryEvolver(uint64_t seed, int sample_size)
      : rng_(seed), sample_size_(sample_size) {}
  EvolverStep step(const Tree& t, const TrueLabeling& truth,
                   const HypothesisLabeling& hyp) override;

 private:
  Rng rng_;
  int sample_size_;
  std::vector<int> pool_;  // persistent edge-index pool for sampling
};

struct UniformRandomSpec {
  uint64_t seed = 0;
};
struct ScriptedSpec {
  SwapScript script;
  ExhaustedPolicy policy = ExhaustedPolicy::Hold;
};
struct GreedyAdversarySpec {
  uint64_t seed = 0;
  int sample_size = 8;
};

using EvolverKind =
    std::variant<UniformRandomSpec, ScriptedSpec, GreedyAdversarySpec>;

std::unique_ptr<Evolver> make_evolver(const EvolverKind& kind);

/// Bubble-style sequence of n(n-1)/2 swaps that reverses the labels of a
/// path tree. Rejects non-path trees.
SwapScript make_reversal_script(const Tree& t);

/// Cited swap budget for the wings shift: (beta+1)(alpha(alpha+1)/2+2alpha).
int64_t wings_swap_budget(int alpha, int beta);

/// Target labeling with every wing's label block moved to the next wing
/// (order within each wing preserved; tails and center unchanged).
TrueLabeling wings_shifted_labeling(const WingsTree& wt);

struct WingsScript {
  SwapScript script;
  int64_t budget = 0;  // wings_swap_budget(alpha, beta)
  TrueLabeling target; // labeling reached from the identity start
};

/// Builds a swap script that takes the identity labeling of a wings tree to
/// the cyclically shifted one. Uses a per-depth rotation through the center
/// (cost beta*alpha^2 + alpha); the generated script is validated before it
/// is returned.
WingsScript make_wings_script(const WingsTree& wt);

}  // namespace treetrack
