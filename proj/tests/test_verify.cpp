#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "treetrack/evolver.hpp"
#include "treetrack/rng.hpp"
#include "treetrack/verify.hpp"

using namespace treetrack;
using namespace treetrack::verify;

TEST_CASE("bfs references: basic values and errors") {
  Tree p = gen_path(3);
  CHECK(bfs_distance(p, 0, 2) == 2);
  CHECK(bfs_distance(p, 1, 1) == 0);
  CHECK(bfs_first_edge(p, 0, 2) == Edge{0, 1});
  CHECK_THROWS_AS(bfs_first_edge(p, 1, 1), std::invalid_argument);
}

TEST_CASE("naive total distance") {
  Tree p4 = gen_path(4);
  TrueLabeling truth = TrueLabeling::identity(4);
  CHECK(naive_total_distance(p4, truth, make_hypothesis_exact(truth)) == 0);
  CHECK(naive_total_distance(p4, truth, make_hypothesis_reversed(truth)) == 8);
}

TEST_CASE("min swaps: trivial instances") {
  Tree p2 = gen_path(2);
  TrueLabeling id2 = TrueLabeling::identity(2);
  MinSwapsResult same = min_swaps_bfs(p2, id2, id2);
  CHECK(same.status == MinSwapsResult::Status::Found);
  CHECK(same.swaps == 0);

  TrueLabeling swapped = TrueLabeling::from_map({1, 0});
  MinSwapsResult one = min_swaps_bfs(p2, id2, swapped);
  CHECK(one.status == MinSwapsResult::Status::Found);
  CHECK(one.swaps == 1);
}

TEST_CASE("min swaps on the small wings instance") {
  WingsTree wt = gen_wings(1, 2);
  TrueLabeling t0 = TrueLabeling::identity(wt.tree.n());
  TrueLabeling t1 = wings_shifted_labeling(wt);
  MinSwapsResult r = min_swaps_bfs(wt.tree, t0, t1);
  REQUIRE(r.status == MinSwapsResult::Status::Found);
  CHECK(r.swaps == 3);  // cheapest exchange of the two single-vertex wings
  // relation to the per-swap distance bound and the cited budget
  HypothesisLabeling h0 = make_hypothesis_exact(t0);
  int64_t D = 0;
  for (LabelId l = 0; l < wt.tree.n(); ++l)
    D += bfs_distance(wt.tree, t1.vertex_of(l), h0.vertex_of(l));
  CHECK(2 * r.swaps >= D);
  CHECK(r.swaps <= wings_swap_budget(1, 2));
}

TEST_CASE("min swaps is symmetric") {
  Rng rng(14);
  Tree t = gen_random_bounded(6, 3, 3);
  for (int rep = 0; rep < 10; ++rep) {
    TrueLabeling a = TrueLabeling::identity(6);
    TrueLabeling b = TrueLabeling::identity(6);
    for (int s = 0; s < 6; ++s) {
      const auto& e = t.edges()[rng.below(t.edges().size())];
      if (rng.below(2)) a.swap_vertices(e.first, e.second);
      else b.swap_vertices(e.first, e.second);
    }
    MinSwapsResult ab = min_swaps_bfs(t, a, b);
    MinSwapsResult ba = min_swaps_bfs(t, b, a);
    REQUIRE(ab.status == MinSwapsResult::Status::Found);
    CHECK(ab.swaps == ba.swaps);
  }
}

TEST_CASE("min swaps respects the half-distance floor") {
  Rng rng(8);
  Tree t = gen_random_bounded(7, 3, 11);
  for (int rep = 0; rep < 10; ++rep) {
    TrueLabeling goal = TrueLabeling::identity(7);
    for (int s = 0; s < 8; ++s) {
      const auto& e = t.edges()[rng.below(t.edges().size())];
      goal.swap_vertices(e.first, e.second);
    }
    TrueLabeling start = TrueLabeling::identity(7);
    MinSwapsResult r = min_swaps_bfs(t, start, goal);
    REQUIRE(r.status == MinSwapsResult::Status::Found);
    int64_t D = 0;
    for (LabelId l = 0; l < 7; ++l)
      D += bfs_distance(t, goal.vertex_of(l), start.vertex_of(l));
    CHECK(2 * r.swaps >= D);
  }
}

TEST_CASE("budget exhaustion is reported distinctly") {
  WingsTree wt = gen_wings(2, 2);
  TrueLabeling t0 = TrueLabeling::identity(wt.tree.n());
  TrueLabeling t1 = wings_shifted_labeling(wt);
  MinSwapsResult r = min_swaps_bfs(wt.tree, t0, t1, /*node_budget=*/5);
  CHECK(r.status == MinSwapsResult::Status::BudgetExceeded);
  CHECK(r.swaps == -1);

  MinSwapsResult full = min_swaps_bfs(wt.tree, t0, t1);
  CHECK(full.status == MinSwapsResult::Status::Found);
  CHECK(full.swaps == 10);
}

TEST_CASE("oversized configuration space is rejected") {
  Tree big = gen_path(17);
  TrueLabeling id = TrueLabeling::identity(17);
  CHECK_THROWS_AS(min_swaps_bfs(big, id, id), std::invalid_argument);
}

TEST_CASE("verification suites pass") {
  for (auto level : {Level::Quick, Level::Full}) {
    auto checks = run_verification(level);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
  }
}
