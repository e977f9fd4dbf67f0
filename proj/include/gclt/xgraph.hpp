#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gclt/group.hpp"

namespace gclt {

// Simple graph on the isomorphism classes of groups of order n: vertices in
// catalog order, an edge between distinct classes whose direct product is an
// ACLT group (evaluated by the product characterization).
struct XGraph {
  int n = 0;
  std::vector<std::string> vertices;           // catalog recipe strings
  std::vector<std::pair<int, int>> edges;      // i < j, lexicographic
  bool complete = false;
  bool connected = false;
};

// n must be a complete catalog order.
XGraph build_xgraph(int n);

// Oracle form of the edge rule: builds the product and brute-forces the
// ACLT check. Requires |gi| * |gj| within bound.
bool brute_edge_check(const FiniteGroup& gi, const FiniteGroup& gj,
                      int bound = kDefaultEnumerationBound);

bool is_complete(const XGraph& x);
bool is_connected(const XGraph& x);

// DOT rendering; graph name X_<n>, node labels are the recipe strings.
std::string to_dot(const XGraph& x);
// {"n":, "vertices": [...], "edges": [[i,j],...], "complete":, "connected":}
nlohmann::json to_json(const XGraph& x);

}  // namespace gclt
