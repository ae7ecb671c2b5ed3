#pragma once

#include "treetrack/labeling.hpp"
#include "treetrack/tree.hpp"

namespace treetrack {

/// Answer to a (label, vertex) probe: either the label is at the queried
/// vertex, or the first edge of the path toward its true location.
struct OracleAnswer {
  bool at_target;
  VertexId from = -1;
  VertexId to = -1;
};

inline OracleAnswer oracle_query(const Tree& t, const TrueLabeling& truth,
                                 LabelId l, VertexId u) {
  VertexId w = truth.vertex_of(l);
  if (w == u) return {true, -1, -1};
  return {false, u, t.first_hop(u, w)};
}

}  // namespace treetrack
