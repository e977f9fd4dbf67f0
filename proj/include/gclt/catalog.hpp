#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gclt/group.hpp"

namespace gclt {

// One catalog order: isomorphism-class representatives with a completeness
// flag and the fixture count of groups of that order.
struct CatalogEntry {
  int n = 0;
  bool complete = false;
  int fixture_count = 0;
  std::vector<std::string> recipes;  // spec strings, cyclic group first

  nlohmann::json to_json() const;
};

// Orders shipped by the catalog, ascending, with completeness flags.
// Complete orders cover at least all n <= 16, 18, 20, 21, 27, 28 and every
// squarefree n <= 63.
std::vector<std::pair<int, bool>> supported_orders();

bool is_supported_order(int n);

CatalogEntry catalog_entry(int n);

struct CatalogGroups {
  int n = 0;
  bool complete = false;
  int fixture_count = 0;
  std::vector<FiniteGroup> groups;
};

// Builds every recipe of catalog_entry(n), in recipe order.
CatalogGroups groups_of_order(int n);

// Known number of groups of order n (shipped fixture data).
int fixture_group_count(int n);

// The unique catalog recipe isomorphic to g; |g| must be a complete catalog
// order.
std::string find_iso_class(const FiniteGroup& g);

}  // namespace gclt
