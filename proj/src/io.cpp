#include "treetrack/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace treetrack {
namespace io {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  return os;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  return is;
}

}  // namespace

void save_tree(std::ostream& os, const Tree& t) {
  os << t.n() << "\n";
  for (const auto& [u, v] : t.edges()) os << u << " " << v << "\n";
}

Tree load_tree(std::istream& is) {
  int n = 0;
  if (!(is >> n) || n < 2) throw std::runtime_error("bad tree header");
  std::vector<Edge> edges(n - 1);
  for (auto& [u, v] : edges)
    if (!(is >> u >> v)) throw std::runtime_error("truncated tree edge list");
  Tree t = Tree::from_edges(edges);
  if (t.n() != n) throw std::runtime_error("tree header does not match edges");
  return t;
}

void save_tree_file(const std::string& path, const Tree& t) {
  auto os = open_out(path);
  save_tree(os, t);
}

Tree load_tree_file(const std::string& path) {
  auto is = open_in(path);
  return load_tree(is);
}

void save_labeling(std::ostream& os,
                   const std::vector<VertexId>& label_to_vertex) {
  for (size_t l = 0; l < label_to_vertex.size(); ++l)
    os << l << " " << label_to_vertex[l] << "\n";
}

namespace {

std::vector<VertexId> read_label_map(std::istream& is) {
  std::vector<std::pair<LabelId, VertexId>> rows;
  LabelId l;
  VertexId v;
  while (is >> l >> v) rows.push_back({l, v});
  std::vector<VertexId> map(rows.size(), -1);
  for (const auto& [label, vertex] : rows) {
    if (label < 0 || label >= static_cast<LabelId>(rows.size()) ||
        map[label] != -1)
      throw std::runtime_error("labeling file: bad or repeated label id");
    map[label] = vertex;
  }
  return map;
}

}  // namespace

TrueLabeling load_true_labeling(std::istream& is) {
  return TrueLabeling::from_map(read_label_map(is));
}

HypothesisLabeling load_hypothesis(std::istream& is, int n_vertices) {
  return HypothesisLabeling::from_map(n_vertices, read_label_map(is));
}

TrueLabeling load_true_labeling_file(const std::string& path) {
  auto is = open_in(path);
  return load_true_labeling(is);
}

HypothesisLabeling load_hypothesis_file(const std::string& path,
                                        int n_vertices) {
  auto is = open_in(path);
  return load_hypothesis(is, n_vertices);
}

void save_script(std::ostream& os, const SwapScript& s) {
  os << s.length() << "\n";
  for (const auto& [u, v] : s.swaps) os << u << " " << v << "\n";
}

SwapScript load_script(std::istream& is) {
  int64_t m = 0;
  if (!(is >> m) || m < 0) throw std::runtime_error("bad script header");
  SwapScript s;
  s.swaps.resize(m);
  for (auto& [u, v] : s.swaps)
    if (!(is >> u >> v)) throw std::runtime_error("truncated script");
  return s;
}

void save_script_file(const std::string& path, const SwapScript& s) {
  auto os = open_out(path);
  save_script(os, s);
}

SwapScript load_script_file(const std::string& path) {
  auto is = open_in(path);
  return load_script(is);
}

void save_wings_roles(std::ostream& os, const WingsLayout& layout) {
  struct Row {
    std::string role;
    int index;
  };
  int n = layout.alpha * layout.beta + layout.alpha + 1;
  std::vector<Row> rows(n, {"", 0});
  rows[layout.center] = {"center", 0};
  for (int i = 0; i < layout.beta; ++i)
    for (VertexId v : layout.wings[i]) rows[v] = {"wing", i};
  for (int d = 0; d < layout.alpha; ++d) rows[layout.tails[d]] = {"tail", d};
  for (int v = 0; v < n; ++v)
    os << v << " " << rows[v].role << " " << rows[v].index << "\n";
}

void save_wings_roles_file(const std::string& path, const WingsLayout& layout) {
  auto os = open_out(path);
  save_wings_roles(os, layout);
}

void write_run_csv(std::ostream& os, const std::string& config_echo,
                   const std::vector<IterationRecord>& records) {
  os << "# config: " << config_echo << "\n";
  os << "j,D_j,A_j,dt_j,evolver_steps,max_load,step_index\n";
  for (const auto& r : records)
    os << r.j << "," << r.D << "," << r.moves << "," << r.steps << ","
       << r.evolver_steps << "," << r.max_load << "," << r.step_index << "\n";
}

void write_run_csv_file(const std::string& path, const std::string& config_echo,
                        const std::vector<IterationRecord>& records) {
  auto os = open_out(path);
  write_run_csv(os, config_echo, records);
}

}  // namespace io
}  // namespace treetrack
