#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <queue>

#include "treetrack/oracle.hpp"
#include "treetrack/rng.hpp"
#include "treetrack/tree.hpp"
#include "treetrack/verify.hpp"

using namespace treetrack;

namespace {

// plain BFS reference for parent/depth construction
void bfs_reference(const Tree& t, std::vector<VertexId>& parent,
                   std::vector<int>& depth) {
  parent.assign(t.n(), -1);
  depth.assign(t.n(), 0);
  std::queue<VertexId> q;
  q.push(0);
  parent[0] = 0;
  std::vector<char> seen(t.n(), 0);
  seen[0] = 1;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId w : t.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = u;
        depth[w] = depth[u] + 1;
        q.push(w);
      }
  }
}

}  // namespace

TEST_CASE("build from edges: small examples") {
  Tree path = Tree::from_edges({{0, 1}, {1, 2}});
  CHECK(path.n() == 3);
  CHECK(path.depth(2) == 2);
  CHECK(path.root() == 0);

  Tree star = Tree::from_edges({{0, 1}, {0, 2}, {0, 3}});
  CHECK(star.max_degree() == 3);
  CHECK(star.depth(3) == 1);
}

TEST_CASE("build from edges: rejects malformed input") {
  CHECK_THROWS_AS(Tree::from_edges({}), std::invalid_argument);
  CHECK_THROWS_AS(Tree::from_edges({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Tree::from_edges({{0, 1}, {1, 0}}), std::invalid_argument);
  // wrong edge count for the implied vertex range
  CHECK_THROWS_AS(Tree::from_edges({{0, 1}, {1, 2}, {2, 0}}),
                  std::invalid_argument);
  // right count but a cycle plus an unreachable component
  CHECK_THROWS_AS(Tree::from_edges({{0, 1}, {1, 2}, {2, 0}, {3, 4}}),
                  std::invalid_argument);
}

TEST_CASE("generators: path, balanced, bounded-degree") {
  Tree p = gen_path(4);
  CHECK(p.distance(0, 3) == 3);
  CHECK(p.max_degree() == 2);
  CHECK_THROWS_AS(gen_path(1), std::invalid_argument);

  Tree b = gen_balanced(7, 2);
  CHECK(b.depth(3) == 2);
  CHECK(b.depth(6) == 2);
  CHECK(b.max_degree() == 3);

  Tree r1 = gen_random_bounded(100, 3, 7);
  Tree r2 = gen_random_bounded(100, 3, 7);
  CHECK(r1.edges() == r2.edges());
  CHECK_THROWS_AS(gen_random_bounded(100, 1, 7), std::invalid_argument);

  for (uint64_t seed = 0; seed < 6; ++seed) {
    for (int k : {2, 3, 5}) {
      Tree t = gen_random_bounded(60, k, seed);
      CHECK(t.max_degree() <= k);
    }
  }
}

TEST_CASE("random tree parent/depth match plain BFS") {
  Tree t = gen_random_bounded(1000, 4, 42);
  std::vector<VertexId> parent;
  std::vector<int> depth;
  bfs_reference(t, parent, depth);
  for (VertexId v = 1; v < t.n(); ++v) {
    CHECK(t.parent(v) == parent[v]);
    CHECK(t.depth(v) == depth[v]);
  }
}

TEST_CASE("wings generator") {
  WingsTree w23 = gen_wings(2, 3);
  CHECK(w23.tree.n() == 9);
  WingsTree w12 = gen_wings(1, 2);
  CHECK(w12.tree.n() == 4);
  CHECK_THROWS_AS(gen_wings(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_wings(0, 3), std::invalid_argument);

  for (int alpha : {1, 2, 3, 5}) {
    for (int beta : {2, 3, 4}) {
      WingsTree wt = gen_wings(alpha, beta);
      CHECK(wt.tree.n() == alpha * beta + alpha + 1);
      for (const auto& wing : wt.layout.wings) {
        CHECK(static_cast<int>(wing.size()) == alpha);
        CHECK(wt.tree.depth(wing.back()) == alpha);  // deepest wing vertex
      }
      CHECK(wt.tree.depth(wt.layout.tails.back()) == alpha);
    }
  }
}

TEST_CASE("distance is a metric") {
  Rng rng(11);
  Tree t = gen_random_bounded(80, 3, 5);
  for (int i = 0; i < 300; ++i) {
    VertexId a = static_cast<VertexId>(rng.below(80));
    VertexId b = static_cast<VertexId>(rng.below(80));
    VertexId c = static_cast<VertexId>(rng.below(80));
    CHECK(t.distance(a, b) >= 0);
    CHECK((t.distance(a, b) == 0) == (a == b));
    CHECK(t.distance(a, b) == t.distance(b, a));
    CHECK(t.distance(a, c) <= t.distance(a, b) + t.distance(b, c));
  }
}

TEST_CASE("distance matches BFS on random pairs") {
  Rng rng(3);
  Tree t = gen_random_bounded(64, 3, 12);
  for (int i = 0; i < 500; ++i) {
    VertexId u = static_cast<VertexId>(rng.below(64));
    VertexId v = static_cast<VertexId>(rng.below(64));
    CHECK(t.distance(u, v) == verify::bfs_distance(t, u, v));
  }
}

TEST_CASE("oracle: directional answers") {
  // label two hops away: the answer is the first edge toward it
  Tree t = Tree::from_edges({{0, 1}, {1, 2}});
  TrueLabeling truth = TrueLabeling::identity(3);
  OracleAnswer a = oracle_query(t, truth, 2, 0);
  CHECK_FALSE(a.at_target);
  CHECK(a.from == 0);
  CHECK(a.to == 1);

  OracleAnswer b = oracle_query(t, truth, 1, 1);
  CHECK(b.at_target);

  CHECK_THROWS_AS(t.first_hop(2, 2), std::invalid_argument);
}

TEST_CASE("oracle progress, exhaustive on small trees") {
  Rng rng(77);
  for (uint64_t seed : {1ull, 2ull, 3ull}) {
    int n = 48 + static_cast<int>(rng.below(17));
    Tree t = gen_random_bounded(n, 3, seed);
    TrueLabeling truth = TrueLabeling::identity(n);
    for (int s = 0; s < 5 * n; ++s) {
      const auto& e = t.edges()[rng.below(t.edges().size())];
      truth.swap_vertices(e.first, e.second);
    }
    for (LabelId l = 0; l < n; ++l) {
      VertexId w = truth.vertex_of(l);
      for (VertexId u = 0; u < n; ++u) {
        OracleAnswer a = oracle_query(t, truth, l, u);
        if (u == w) {
          CHECK(a.at_target);
        } else {
          REQUIRE_FALSE(a.at_target);
          CHECK(t.is_edge(a.from, a.to));
          CHECK(t.distance(a.to, w) == t.distance(u, w) - 1);
        }
      }
    }
  }
}

TEST_CASE("oracle matches BFS first edges") {
  Rng rng(5);
  Tree t = gen_random_bounded(40, 3, 9);
  TrueLabeling truth = TrueLabeling::identity(40);
  for (int s = 0; s < 200; ++s) {
    const auto& e = t.edges()[rng.below(t.edges().size())];
    truth.swap_vertices(e.first, e.second);
  }
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    LabelId l = static_cast<LabelId>(rng.below(40));
    VertexId u = static_cast<VertexId>(rng.below(40));
    if (truth.vertex_of(l) == u) continue;
    OracleAnswer a = oracle_query(t, truth, l, u);
    Edge want = verify::bfs_first_edge(t, u, truth.vertex_of(l));
    CHECK(a.from == want.first);
    CHECK(a.to == want.second);
    ++checked;
  }
  CHECK(checked > 800);
}
