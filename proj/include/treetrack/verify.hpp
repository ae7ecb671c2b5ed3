#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "treetrack/labeling.hpp"
#include "treetrack/tree.hpp"

namespace treetrack {
namespace verify {

/// Plain BFS distance; no precomputed index.
int bfs_distance(const Tree& t, VertexId u, VertexId v);

/// First edge on the BFS path from u to w. Requires u != w.
Edge bfs_first_edge(const Tree& t, VertexId u, VertexId w);

/// Full per-label BFS recomputation of the total distance.
int64_t naive_total_distance(const Tree& t, const TrueLabeling& truth,
                             const HypothesisLabeling& hyp);

struct MinSwapsResult {
  enum class Status { Found, BudgetExceeded };
  Status status = Status::BudgetExceeded;
  int64_t swaps = -1;
  int64_t nodes_expanded = 0;
};

/// Exact minimum number of adjacent swaps transforming one labeling into
/// another, by breadth-first search over label permutations (packed integer
/// keys; practical for n <= 8). A connected tree makes every permutation
/// reachable, so running out of states is an internal error; running out of
/// budget is reported distinctly.
MinSwapsResult min_swaps_bfs(const Tree& t, const TrueLabeling& start,
                             const TrueLabeling& goal,
                             int64_t node_budget = 1'000'000);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

enum class Level { Quick, Full };

/// Cross-checks the fast index-based queries and incremental distance
/// maintenance against the brute-force reference implementations.
/// Full level adds the configuration-space searches on small wings trees.
std::vector<CheckResult> run_verification(Level level);

}  // namespace verify
}  // namespace treetrack
