#include "gclt/xgraph.hpp"

#include <numeric>
#include <stdexcept>

#include "gclt/catalog.hpp"
#include "gclt/constructors.hpp"
#include "gclt/predicates.hpp"

namespace gclt {

namespace {

bool edges_connected(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (n_vertices <= 1) return true;
  std::vector<int> root(n_vertices);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  int components = n_vertices;
  for (const auto& [a, b] : edges) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      root[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

XGraph build_xgraph(int n) {
  const CatalogGroups cat = groups_of_order(n);
  if (!cat.complete)
    throw std::invalid_argument("xgraph requires a complete catalog order; " +
                                std::to_string(n) + " is partial");
  XGraph x;
  x.n = n;
  for (const FiniteGroup& g : cat.groups) x.vertices.push_back(g.spec());
  const int v = static_cast<int>(cat.groups.size());
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (product_aclt_expected(cat.groups[i], cat.groups[j]))
        x.edges.emplace_back(i, j);
  x.complete = is_complete(x);
  x.connected = is_connected(x);
  return x;
}

bool brute_edge_check(const FiniteGroup& gi, const FiniteGroup& gj, int bound) {
  const long long order = static_cast<long long>(gi.order()) * gj.order();
  if (order > bound)
    throw std::invalid_argument("product order " + std::to_string(order) +
                                " exceeds enumeration bound " +
                                std::to_string(bound));
  return is_aclt_group(direct_product(gi, gj), bound).ok;
}

bool is_complete(const XGraph& x) {
  const std::size_t v = x.vertices.size();
  return x.edges.size() == v * (v - 1) / 2;
}

bool is_connected(const XGraph& x) {
  return edges_connected(static_cast<int>(x.vertices.size()), x.edges);
}

std::string to_dot(const XGraph& x) {
  std::string out = "graph X_" + std::to_string(x.n) + " {\n";
  for (std::size_t i = 0; i < x.vertices.size(); ++i)
    out += "  v" + std::to_string(i) + " [label=\"" + x.vertices[i] + "\"];\n";
  for (const auto& [a, b] : x.edges)
    out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

nlohmann::json to_json(const XGraph& x) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : x.edges) edges.push_back(nlohmann::json::array({a, b}));
  return nlohmann::json{{"n", x.n},
                        {"vertices", x.vertices},
                        {"edges", std::move(edges)},
                        {"complete", x.complete},
                        {"connected", x.connected}};
}

}  // namespace gclt
