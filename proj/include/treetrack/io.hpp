#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "treetrack/engine.hpp"
#include "treetrack/evolver.hpp"
#include "treetrack/labeling.hpp"
#include "treetrack/tree.hpp"

namespace treetrack {
namespace io {

/// Edge-list text: first line n, then n-1 lines "u v" (0-based).
void save_tree(std::ostream& os, const Tree& t);
Tree load_tree(std::istream& is);
void save_tree_file(const std::string& path, const Tree& t);
Tree load_tree_file(const std::string& path);

/// Labeling text: n lines "label vertex". Truth loads validate the map is a
/// permutation; hypothesis loads allow repeated vertices.
void save_labeling(std::ostream& os, const std::vector<VertexId>& label_to_vertex);
TrueLabeling load_true_labeling(std::istream& is);
HypothesisLabeling load_hypothesis(std::istream& is, int n_vertices);
TrueLabeling load_true_labeling_file(const std::string& path);
HypothesisLabeling load_hypothesis_file(const std::string& path, int n_vertices);

/// Script text: first line m, then m lines "u v".
void save_script(std::ostream& os, const SwapScript& s);
SwapScript load_script(std::istream& is);
void save_script_file(const std::string& path, const SwapScript& s);
SwapScript load_script_file(const std::string& path);

/// Wings role map: one line "vertex role index" per vertex, role in
/// {center, wing, tail}; index is the wing number or tail position.
void save_wings_roles(std::ostream& os, const WingsLayout& layout);
void save_wings_roles_file(const std::string& path, const WingsLayout& layout);

/// Per-iteration CSV. The config echo goes into a single comment line so a
/// run can be reproduced from its own output; no timestamps are written.
void write_run_csv(std::ostream& os, const std::string& config_echo,
                   const std::vector<IterationRecord>& records);
void write_run_csv_file(const std::string& path, const std::string& config_echo,
                        const std::vector<IterationRecord>& records);

}  // namespace io
}  // namespace treetrack
