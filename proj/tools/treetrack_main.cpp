#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "treetrack/engine.hpp"
#include "treetrack/evolver.hpp"
#include "treetrack/io.hpp"
#include "treetrack/verify.hpp"

using json = nlohmann::ordered_json;
using namespace treetrack;

namespace {

std::map<std::string, std::string> parse_kv(const std::string& body) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("expected key=value, got '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

int kv_int(const std::map<std::string, std::string>& kv, const std::string& key,
           std::optional<int> fallback = std::nullopt) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (fallback) return *fallback;
    throw CLI::ValidationError("missing parameter '" + key + "'");
  }
  return std::stoi(it->second);
}

struct TreeSpec {
  std::string text;
  Tree build(uint64_t seed, WingsLayout* wings_out = nullptr) const {
    auto colon = text.find(':');
    std::string family = text.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (family == "file") return io::load_tree_file(body);
    if (family == "wings") {
      auto kv = parse_kv(body);
      WingsTree wt = gen_wings(kv_int(kv, "alpha"), kv_int(kv, "beta"));
      if (wings_out) *wings_out = wt.layout;
      return std::move(wt.tree);
    }
    auto kv = parse_kv(body);
    int n = kv_int(kv, "n");
    if (family == "path") return gen_path(n);
    if (family == "balanced") return gen_balanced(n, kv_int(kv, "arity", 2));
    if (family == "random")
      return gen_random_bounded(n, kv_int(kv, "k", 3), seed);
    throw CLI::ValidationError("unknown tree family '" + family + "'");
  }
};

struct EvolverSpec {
  std::string text;

  // wings layout is needed only for the auto-generated wings script
  EvolverKind build(uint64_t seed, const Tree& tree,
                    const WingsLayout* wings) const {
    auto colon = text.find(':');
    std::string kind = text.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (kind == "uniform") return UniformRandomSpec{seed};
    if (kind == "greedy") {
      int sample = 8;
      if (!body.empty()) sample = kv_int(parse_kv(body), "sample", 8);
      return GreedyAdversarySpec{seed, sample};
    }
    if (kind == "none") return ScriptedSpec{SwapScript{}, ExhaustedPolicy::Hold};
    if (kind == "wings") {
      if (!wings)
        throw CLI::ValidationError("evolver 'wings' needs a wings tree");
      WingsTree wt = gen_wings(wings->alpha, wings->beta);
      return ScriptedSpec{make_wings_script(wt).script, ExhaustedPolicy::Hold};
    }
    if (kind == "script") {
      auto policy = ExhaustedPolicy::Hold;
      std::string path = body;
      auto at = body.rfind(':');
      if (at != std::string::npos) {
        std::string tail = body.substr(at + 1);
        if (tail == "halt" || tail == "hold") {
          path = body.substr(0, at);
          policy = tail == "halt" ? ExhaustedPolicy::Halt : ExhaustedPolicy::Hold;
        }
      }
      SwapScript s = io::load_script_file(path);
      TrueLabeling probe = TrueLabeling::identity(tree.n());
      apply_script(tree, s, probe);  // validates entries are tree edges
      return ScriptedSpec{std::move(s), policy};
    }
    throw CLI::ValidationError("unknown evolver '" + kind + "'");
  }
};

HypothesisLabeling build_init(const std::string& spec, const Tree& tree,
                              const TrueLabeling& truth, uint64_t seed) {
  if (spec == "exact") return make_hypothesis_exact(truth);
  if (spec == "reversed") return make_hypothesis_reversed(truth);
  if (spec == "all-at-root") return make_hypothesis_all_at(truth.n(), tree.root());
  if (spec == "random") {
    Rng rng(seed);
    return make_hypothesis_uniform_random(truth.n(), rng);
  }
  if (spec.rfind("file:", 0) == 0)
    return io::load_hypothesis_file(spec.substr(5), tree.n());
  throw CLI::ValidationError("unknown init '" + spec + "'");
}

std::filesystem::path out_dir() {
  const char* env = std::getenv("TREETRACK_OUT_DIR");
  return env ? std::filesystem::path(env) : std::filesystem::path(".");
}

struct Scenario {
  TreeSpec tree;
  EvolverSpec evolver;
  std::string speedup = "2/1";
  std::string init = "reversed";
  int64_t iterations = 0;  // 0 = default budget
  uint64_t seed = 1;
  bool to_script_end = false;

  json echo() const {
    json j;
    j["tree"] = tree.text;
    j["evolver"] = evolver.text;
    j["speedup"] = speedup;
    j["init"] = init;
    j["iterations"] = iterations;
    j["seed"] = seed;
    j["to_script_end"] = to_script_end;
    return j;
  }
};

struct ScenarioResult {
  RunResult run;
  LemmaReport lemmas;
  int n = 0;
};

ScenarioResult run_scenario(const Scenario& sc) {
  WingsLayout wings;
  WingsLayout* wings_ptr = sc.tree.text.rfind("wings", 0) == 0 ? &wings : nullptr;
  Tree tree = sc.tree.build(Rng::derive(sc.seed, 1), wings_ptr);
  TrueLabeling truth = TrueLabeling::identity(tree.n());
  HypothesisLabeling hyp = build_init(sc.init, tree, truth, Rng::derive(sc.seed, 2));
  Speedup c = Speedup::parse(sc.speedup);
  EvolverKind kind = sc.evolver.build(Rng::derive(sc.seed, 3), tree, wings_ptr);
  auto evolver = make_evolver(kind);

  RunLimits limits;
  if (sc.to_script_end) {
    const auto* scripted = std::get_if<ScriptedSpec>(&kind);
    if (!scripted)
      throw CLI::ValidationError("--to-script-end needs a scripted evolver");
    limits.scaled_time = scripted->script.length() * c.p;
  } else {
    limits.iterations =
        sc.iterations > 0 ? sc.iterations : default_iteration_budget(tree.n());
  }

  ScenarioResult res;
  res.n = tree.n();
  res.run = run_simulation(tree, std::move(truth), std::move(hyp), *evolver, c,
                           limits);
  res.lemmas = check_lemma_bounds(res.run.records, tree.n(), c);
  return res;
}

json summary_json(const Scenario& sc, const ScenarioResult& res) {
  json j;
  j["config"] = sc.echo();
  j["n"] = res.n;
  j["steady_state_mean_D"] = res.run.steady_state_mean_D();
  j["final_D"] = res.run.final_D;
  j["lemma_violations"] = res.lemmas.identity.size() + res.lemmas.inequality.size();
  j["max_load_over_run"] = res.run.max_load_over_run();
  j["max_intra_iteration_D"] = res.run.max_intra_iteration_D;
  j["algorithm_steps"] = res.run.algorithm_steps;
  j["evolver_swaps"] = res.run.evolver_swaps;
  j["iterations_completed"] = res.run.records.size();
  return j;
}

int cmd_simulate(const Scenario& sc, const std::string& name) {
  ScenarioResult res = run_scenario(sc);
  auto dir = out_dir();
  std::filesystem::create_directories(dir);
  io::write_run_csv_file((dir / (name + ".csv")).string(), sc.echo().dump(),
                         res.run.records);
  json summary = summary_json(sc, res);
  std::ofstream js(dir / (name + ".json"));
  js << summary.dump(2) << "\n";
  std::cout << summary.dump(2) << std::endl;
  return res.lemmas.ok() ? 0 : 1;
}

struct SweepCell {
  Scenario base;
  int n = 0;
  int reps = 1;
  std::string family;
};

int cmd_sweep(const std::vector<int>& ns, const std::vector<std::string>& speeds,
              const std::vector<std::string>& evolvers, const std::string& family,
              const std::string& init, int reps, int64_t iters, uint64_t seed,
              int jobs, const std::string& out_path) {
  std::vector<SweepCell> cells;
  for (int n : ns)
    for (const auto& sp : speeds)
      for (const auto& ev : evolvers) {
        SweepCell cell;
        cell.n = n;
        cell.reps = reps;
        cell.family = family;
        cell.base.speedup = sp;
        cell.base.evolver.text = ev;
        cell.base.init = init;
        cell.base.iterations = iters;
        auto colon = family.find(':');
        std::string fam = family.substr(0, colon);
        std::string fam_body =
            colon == std::string::npos ? "" : family.substr(colon + 1);
        if (fam == "wings") {
          int beta = kv_int(parse_kv(fam_body), "beta", 4);
          if ((n - 1) % (beta + 1) != 0)
            throw CLI::ValidationError(
                "wings sweep: n-1 must be divisible by beta+1");
          int alpha = (n - 1) / (beta + 1);
          cell.base.tree.text = "wings:alpha=" + std::to_string(alpha) +
                                ",beta=" + std::to_string(beta);
          cell.base.to_script_end = true;
          cell.base.init = "exact";
          cell.base.evolver.text = "wings";
        } else {
          cell.base.tree.text =
              family.substr(0, colon) + ":n=" + std::to_string(n) +
              (fam_body.empty() ? "" : "," + fam_body);
        }
        cells.push_back(std::move(cell));
      }

  struct Row {
    bool ok = false;
    std::string error;
    double steady_D = 0, max_load = 0;
    int64_t lemma_violations = 0;
  };
  std::vector<Row> rows(cells.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= cells.size()) return;
      Row& row = rows[i];
      try {
        double sum_D = 0, sum_load = 0;
        for (int r = 0; r < cells[i].reps; ++r) {
          Scenario sc = cells[i].base;
          sc.seed = Rng::derive(seed, i * 1000003ull + static_cast<uint64_t>(r));
          ScenarioResult res = run_scenario(sc);
          sum_D += cells[i].base.to_script_end
                       ? static_cast<double>(res.run.final_D)
                       : res.run.steady_state_mean_D();
          sum_load += res.run.max_load_over_run();
          row.lemma_violations += static_cast<int64_t>(
              res.lemmas.identity.size() + res.lemmas.inequality.size());
        }
        row.steady_D = sum_D / cells[i].reps;
        row.max_load = sum_load / cells[i].reps;
        row.ok = true;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  int nthreads = std::max(1, std::min<int>(jobs > 0 ? jobs : hw,
                                           static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot write " + out_path);
  json echo;
  echo["family"] = family;
  echo["init"] = init;
  echo["reps"] = reps;
  echo["iterations"] = iters;
  echo["seed"] = seed;
  os << "# config: " << echo.dump() << "\n";
  os << "n,c,evolver,tree,reps,steady_D,D_over_n,D_over_n2,max_load,"
        "load_over_sqrt_n,lemma_violations\n";
  int failures = 0;
  for (size_t i = 0; i < cells.size(); ++i) {
    const auto& cell = cells[i];
    const auto& row = rows[i];
    if (!row.ok) {
      ++failures;
      std::cerr << "cell n=" << cell.n << " c=" << cell.base.speedup
                << " evolver=" << cell.base.evolver.text
                << " failed: " << row.error << "\n";
      continue;
    }
    double n = cell.n;
    os << cell.n << "," << cell.base.speedup << "," << cell.base.evolver.text
       << "," << cell.base.tree.text << "," << cell.reps << "," << row.steady_D
       << "," << row.steady_D / n << "," << row.steady_D / (n * n) << ","
       << row.max_load << "," << row.max_load / std::sqrt(n) << ","
       << row.lemma_violations << "\n";
  }
  std::cout << "sweep: " << cells.size() - failures << "/" << cells.size()
            << " cells -> " << out_path << std::endl;
  return failures == 0 ? 0 : 1;
}

int cmd_adversary_script(int alpha, int beta, const std::string& out,
                         const std::string& roles, const std::string& tree_out) {
  WingsTree wt = gen_wings(alpha, beta);
  WingsScript ws = make_wings_script(wt);
  io::save_script_file(out, ws.script);
  if (!roles.empty()) io::save_wings_roles_file(roles, wt.layout);
  if (!tree_out.empty()) io::save_tree_file(tree_out, wt.tree);
  TrueLabeling t0 = TrueLabeling::identity(wt.tree.n());
  HypothesisLabeling h0 = make_hypothesis_exact(t0);
  DistanceState d = compute_distance(wt.tree, ws.target, h0);
  std::cout << "wings(" << alpha << "," << beta << "): n=" << wt.tree.n()
            << " script_length=" << ws.script.length()
            << " opt_budget=" << ws.budget << " D(T1,T0)=" << d.total << "\n";
  return 0;
}

int cmd_verify(const std::string& level) {
  auto checks = verify::run_verification(level == "full" ? verify::Level::Full
                                                         : verify::Level::Quick);
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name
              << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  }
  std::cout << (all ? "verification passed" : "verification FAILED") << std::endl;
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evolving tree label tracking simulator"};
  app.require_subcommand(1);
  app.set_config("--config");

  // simulate
  Scenario sc;
  sc.tree.text = "path:n=64";
  sc.evolver.text = "uniform";
  std::string run_name = "run";
  auto* sim = app.add_subcommand("simulate", "run one scenario");
  sim->add_option("--tree", sc.tree.text,
                  "path:n=N | balanced:n=N,arity=A | random:n=N,k=K | "
                  "wings:alpha=A,beta=B | file:PATH");
  sim->add_option("--evolver", sc.evolver.text,
                  "uniform | greedy[:sample=S] | script:PATH[:hold|halt] | "
                  "wings | none");
  sim->add_option("--speedup", sc.speedup, "rational p/q with c >= 1");
  sim->add_option("--init", sc.init,
                  "exact | reversed | all-at-root | random | file:PATH");
  sim->add_option("--iters", sc.iterations, "iteration budget (0 = default)");
  sim->add_option("--seed", sc.seed, "master seed");
  sim->add_flag("--to-script-end", sc.to_script_end,
                "run exactly through the scripted evolver's last swap");
  sim->add_option("--name", run_name, "output file stem");

  // sweep
  std::vector<int> sw_n = {64, 256};
  std::vector<std::string> sw_speed = {"2/1"};
  std::vector<std::string> sw_evolver = {"uniform"};
  std::string sw_family = "path", sw_init = "reversed", sw_out = "sweep.csv";
  int sw_reps = 3, sw_jobs = 0;
  int64_t sw_iters = 0;
  uint64_t sw_seed = 1;
  auto* sw = app.add_subcommand("sweep", "run a scaling grid");
  sw->add_option("--n", sw_n, "tree sizes")->delimiter(',');
  sw->add_option("--speedup", sw_speed, "speedups")->delimiter(',');
  sw->add_option("--evolver", sw_evolver, "evolvers")->delimiter(',');
  sw->add_option("--tree-family", sw_family,
                 "path | balanced[:arity=A] | random[:k=K] | wings[:beta=B]");
  sw->add_option("--init", sw_init, "initial hypothesis");
  sw->add_option("--reps", sw_reps, "repetitions per cell");
  sw->add_option("--iters", sw_iters, "iteration budget (0 = default)");
  sw->add_option("--seed", sw_seed, "master seed");
  sw->add_option("--jobs", sw_jobs, "parallel cells (0 = hardware)");
  sw->add_option("--out", sw_out, "aggregate CSV path");

  // adversary-script
  int as_alpha = 2, as_beta = 3;
  std::string as_out = "wings_script.txt", as_roles, as_tree;
  auto* as = app.add_subcommand("adversary-script",
                                "generate the wings shift script");
  as->add_option("--alpha", as_alpha, "wing length")->required();
  as->add_option("--beta", as_beta, "wing count")->required();
  as->add_option("--out", as_out, "script file");
  as->add_option("--roles", as_roles, "also write the vertex role map");
  as->add_option("--tree", as_tree, "also write the tree edge list");

  // verify
  std::string v_level = "quick";
  auto* vf = app.add_subcommand("verify", "brute-force cross-checks");
  vf->add_option("--level", v_level, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(sc, run_name);
    if (sw->parsed())
      return cmd_sweep(sw_n, sw_speed, sw_evolver, sw_family, sw_init, sw_reps,
                       sw_iters, sw_seed, sw_jobs, sw_out);
    if (as->parsed())
      return cmd_adversary_script(as_alpha, as_beta, as_out, as_roles, as_tree);
    if (vf->parsed()) return cmd_verify(v_level);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
