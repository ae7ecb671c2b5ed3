#include "treetrack/verify.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "treetrack/evolver.hpp"
#include "treetrack/oracle.hpp"
#include "treetrack/rng.hpp"

namespace treetrack {
namespace verify {

namespace {

std::vector<VertexId> bfs_parents(const Tree& t, VertexId src) {
  std::vector<VertexId> par(t.n(), -1);
  std::queue<VertexId> q;
  q.push(src);
  par[src] = src;
  while (!q.empty()) {
    VertexId u = q.front();
    q.pop();
    for (VertexId w : t.neighbors(u))
      if (par[w] == -1) {
        par[w] = u;
        q.push(w);
      }
  }
  return par;
}

}  // namespace

int bfs_distance(const Tree& t, VertexId u, VertexId v) {
  auto par = bfs_parents(t, u);
  int d = 0;
  while (v != u) {
    v = par[v];
    ++d;
  }
  return d;
}

Edge bfs_first_edge(const Tree& t, VertexId u, VertexId w) {
  if (u == w) throw std::invalid_argument("bfs_first_edge requires u != w");
  auto par = bfs_parents(t, u);
  VertexId step = w;
  while (par[step] != u) step = par[step];
  return {u, step};
}

int64_t naive_total_distance(const Tree& t, const TrueLabeling& truth,
                             const HypothesisLabeling& hyp) {
  int64_t total = 0;
  for (LabelId l = 0; l < truth.n(); ++l)
    total += bfs_distance(t, truth.vertex_of(l), hyp.vertex_of(l));
  return total;
}

MinSwapsResult min_swaps_bfs(const Tree& t, const TrueLabeling& start,
                             const TrueLabeling& goal, int64_t node_budget) {
  const int n = t.n();
  if (n > 16)
    throw std::invalid_argument("min_swaps_bfs: configuration space too large");

  auto pack = [n](const std::vector<LabelId>& vertex_to_label) {
    uint64_t key = 0;
    for (int v = 0; v < n; ++v)
      key |= static_cast<uint64_t>(vertex_to_label[v]) << (4 * v);
    return key;
  };

  const uint64_t start_key = pack(start.vertex_to_label);
  const uint64_t goal_key = pack(goal.vertex_to_label);
  MinSwapsResult res;
  if (start_key == goal_key) {
    res.status = MinSwapsResult::Status::Found;
    res.swaps = 0;
    return res;
  }

  std::unordered_map<uint64_t, int32_t> dist;
  dist.reserve(1 << 16);
  dist[start_key] = 0;
  std::deque<uint64_t> frontier = {start_key};
  std::vector<LabelId> labels(n);

  while (!frontier.empty()) {
    uint64_t key = frontier.front();
    frontier.pop_front();
    ++res.nodes_expanded;
    if (res.nodes_expanded > node_budget) {
      res.status = MinSwapsResult::Status::BudgetExceeded;
      return res;
    }
    int32_t d = dist[key];
    for (const auto& [u, v] : t.edges()) {
      uint64_t lu = (key >> (4 * u)) & 0xf;
      uint64_t lv = (key >> (4 * v)) & 0xf;
      uint64_t next = key & ~((0xfull << (4 * u)) | (0xfull << (4 * v)));
      next |= (lv << (4 * u)) | (lu << (4 * v));
      if (next == goal_key) {
        res.status = MinSwapsResult::Status::Found;
        res.swaps = d + 1;
        return res;
      }
      if (dist.emplace(next, d + 1).second) frontier.push_back(next);
    }
  }
  throw std::logic_error("min_swaps_bfs: goal unreachable on a connected tree");
}

namespace {

void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
           const std::string& detail = "") {
  out.push_back({name, pass, detail});
}

std::string fmt_count(int64_t bad, int64_t total) {
  std::ostringstream os;
  os << bad << " mismatches / " << total << " cases";
  return os.str();
}

}  // namespace

std::vector<CheckResult> run_verification(Level level) {
  std::vector<CheckResult> out;
  Rng rng(0x7ee5eedull);

  // distance and oracle vs BFS, exhaustive on small trees
  {
    int64_t bad = 0, total = 0;
    for (int rep = 0; rep < 8; ++rep) {
      int n = 4 + static_cast<int>(rng.below(13));
      Tree t = gen_random_bounded(n, 2 + static_cast<int>(rng.below(3)),
                                  rng.next());
      TrueLabeling truth = TrueLabeling::identity(n);
      for (int s = 0; s < 4 * n; ++s) {
        const auto& e = t.edges()[rng.below(t.edges().size())];
        truth.swap_vertices(e.first, e.second);
      }
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) {
          ++total;
          if (t.distance(u, v) != bfs_distance(t, u, v)) ++bad;
        }
      for (LabelId l = 0; l < n; ++l)
        for (VertexId u = 0; u < n; ++u) {
          ++total;
          OracleAnswer a = oracle_query(t, truth, l, u);
          if (truth.vertex_of(l) == u) {
            if (!a.at_target) ++bad;
          } else {
            Edge e = bfs_first_edge(t, u, truth.vertex_of(l));
            if (a.at_target || a.from != e.first || a.to != e.second) ++bad;
          }
        }
    }
    check(out, "distance+oracle vs BFS (n<=16, exhaustive)", bad == 0,
          fmt_count(bad, total));
  }

  // randomized equivalence on larger trees
  {
    int64_t bad = 0, total = 0;
    for (int rep = 0; rep < 4; ++rep) {
      int n = 32 + static_cast<int>(rng.below(33));
      Tree t = gen_random_bounded(n, 3, rng.next());
      for (int s = 0; s < 500; ++s) {
        VertexId u = static_cast<VertexId>(rng.below(n));
        VertexId v = static_cast<VertexId>(rng.below(n));
        ++total;
        if (t.distance(u, v) != bfs_distance(t, u, v)) ++bad;
      }
    }
    check(out, "distance vs BFS (n<=64, randomized)", bad == 0,
          fmt_count(bad, total));
  }

  // incremental distance maintenance vs naive recomputation
  {
    int n = 24;
    Tree t = gen_random_bounded(n, 3, 99);
    TrueLabeling truth = TrueLabeling::identity(n);
    HypothesisLabeling hyp = make_hypothesis_reversed(truth);
    DistanceState st = compute_distance(t, truth, hyp);
    int64_t bad = 0, total = 0;
    for (int s = 0; s < 2000; ++s) {
      if (rng.below(2) == 0) {
        const auto& e = t.edges()[rng.below(t.edges().size())];
        apply_true_swap(t, truth, e.first, e.second, hyp, st);
      } else {
        LabelId l = static_cast<LabelId>(rng.below(n));
        const auto& nb = t.neighbors(hyp.vertex_of(l));
        apply_hypothesis_move(t, truth, hyp, l, nb[rng.below(nb.size())], st);
      }
      if (s % 100 == 0) {
        ++total;
        if (naive_total_distance(t, truth, hyp) != st.total) ++bad;
      }
    }
    check(out, "incremental distance vs naive recomputation", bad == 0,
          fmt_count(bad, total));
  }

  if (level == Level::Full) {
    for (int alpha : {1, 2}) {
      WingsTree wt = gen_wings(alpha, 2);
      WingsScript ws = make_wings_script(wt);
      TrueLabeling t0 = TrueLabeling::identity(wt.tree.n());
      HypothesisLabeling h0 = make_hypothesis_exact(t0);
      // distance between the two configurations, measuring goal vs start
      DistanceState ds = compute_distance(wt.tree, ws.target, h0);
      MinSwapsResult ms = min_swaps_bfs(wt.tree, t0, ws.target);
      std::ostringstream det;
      det << "min=" << ms.swaps << " script=" << ws.script.length()
          << " budget=" << ws.budget << " D=" << ds.total;
      bool pass = ms.status == MinSwapsResult::Status::Found &&
                  2 * ms.swaps >= ds.total && ms.swaps <= ws.budget &&
                  ms.swaps <= ws.script.length();
      check(out,
            "configuration BFS wings(" + std::to_string(alpha) + ",2)",
            pass, det.str());
    }
  }
  return out;
}

}  // namespace verify
}  // namespace treetrack
