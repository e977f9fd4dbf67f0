#include "gclt/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gclt/constructors.hpp"
#include "gclt/fixture_data.hpp"
#include "gclt/group_ops.hpp"
#include "gclt/group_spec.hpp"
#include "gclt/numbers.hpp"

namespace gclt {

namespace {

// Explicit recipe lists for the supported non-squarefree orders. Cyclic
// first, then the remaining abelian classes, then the rest.
const std::map<int, std::vector<std::string>>& explicit_recipes() {
  static const std::map<int, std::vector<std::string>> recipes = {
      {4, {"C4", "C2xC2"}},
      {8, {"C8", "C2xC4", "C2xC2xC2", "D4", "Q8"}},
      {9, {"C9", "C3xC3"}},
      {12, {"C12", "C2xC6", "D6", "Dic3", "P(4;(1 2 3),(1 2)(3 4))"}},
      {16,
       {"C16", "C2xC8", "C4xC4", "C2xC2xC4", "C2xC2xC2xC2", "D8", "Q16",
        "SD16", "M(8,2,5)", "M(4,4,3)", "E(2,2,[0,1;1,0],4)", "D4xC2", "Q8xC2",
        "P(8;(1 2 3 4)(5 6 7 8),(2 4)(6 8),(1 5 3 7)(2 6 4 8))"}},
      {18, {"C18", "C3xC6", "D9", "D3xC3", "E(3,2,[2,0;0,2],2)"}},
      {20, {"C20", "C2xC10", "D10", "Dic5", "M(5,4,2)"}},
      {25, {"C25", "C5xC5"}},
      {27, {"C27", "C3xC9", "C3xC3xC3", "M(9,3,4)", "E(3,2,[1,0;1,1],3)"}},
      {28, {"C28", "C2xC14", "D14", "Dic7"}},
      {44, {"C44", "C2xC22", "D22", "Dic11"}},
      {45, {"C45", "C3xC15"}},
      {49, {"C49", "C7xC7"}},
      {50, {"C50", "C5xC10", "D25", "D5xC5", "E(5,2,[4,0;0,4],2)"}},
      {52, {"C52", "C2xC26", "D26", "Dic13", "M(13,4,5)"}},
      {63, {"C63", "C3xC21", "M(7,9,2)", "M(7,3,2)xC3"}},
      // Partial entries: a representative sample, nowhere near the full
      // class lists (15 and 51 groups respectively).
      {24,
       {"C24", "C2xC12", "C2xC2xC6", "D12", "Dic6", "M(3,8,2)", "D4xC3",
        "Q8xC3", "D3xC4", "D3xC2xC2", "P(4;(1 2),(1 2 3 4))",
        "P(4;(1 2 3),(1 2)(3 4))xC2"}},
      {32,
       {"C32", "C2xC16", "C4xC8", "C2xC2xC8", "C2xC4xC4", "C2xC2xC2xC4",
        "C2xC2xC2xC2xC2", "D16", "Q32", "SD32", "M(16,2,9)",
        "E(2,3,[1,1,0;0,1,1;0,0,1],4)"}},
  };
  return recipes;
}

const std::vector<int>& partial_orders() {
  static const std::vector<int> partial = {24, 32};
  return partial;
}

bool is_partial_order(int n) {
  const auto& p = partial_orders();
  return std::find(p.begin(), p.end(), n) != p.end();
}

bool is_squarefree_supported(int n) {
  return n >= 1 && n <= 63 && factorize(n).is_squarefree();
}

const std::map<int, int>& fixture_counts() {
  static const std::map<int, int> counts = [] {
    std::map<int, int> m;
    std::istringstream in(detail::kGroupCountsCsv);
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 + 1);
      m[std::stoi(line.substr(0, c1))] = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
    }
    return m;
  }();
  return counts;
}

// Holder-style enumeration for squarefree n: every group of squarefree order
// is metacyclic(a, b, r) for some split ab = n, so enumerating all valid
// triples and deduplicating by isomorphism yields the full class list.
std::vector<std::string> squarefree_recipes(int n) {
  std::vector<std::string> recipes{"C" + std::to_string(n)};
  std::vector<FiniteGroup> reps{cyclic(n)};

  for (const long long a_ll : divisors(n)) {
    const int a = static_cast<int>(a_ll);
    if (a <= 1) continue;  // a = 1 is the cyclic group
    const int b = n / a;
    for (int r = 2; r < a; ++r) {
      long long rp = 1;
      bool ok = true;
      for (int e = 0; e < b; ++e) rp = rp * r % a;
      ok = rp == 1 % a;
      if (!ok) continue;
      FiniteGroup g = metacyclic(a, b, r);
      bool known = false;
      for (const FiniteGroup& rep : reps)
        if (is_isomorphic(g, rep)) {
          known = true;
          break;
        }
      if (known) continue;
      reps.push_back(std::move(g));
      recipes.push_back("M(" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(r) + ")");
    }
  }

  // Friendlier name for the dihedral class when present.
  if (n % 2 == 0 && n / 2 >= 2) {
    const FiniteGroup dn = dihedral(n / 2);
    for (std::size_t i = 1; i < reps.size(); ++i)
      if (is_isomorphic(reps[i], dn)) {
        recipes[i] = "D" + std::to_string(n / 2);
        break;
      }
  }
  return recipes;
}

[[noreturn]] void unsupported(int n) {
  std::string msg = "order " + std::to_string(n) +
                    " is not in the catalog; supported orders:";
  for (const auto& [o, complete] : supported_orders()) {
    msg += ' ';
    msg += std::to_string(o);
    if (!complete) msg += "(partial)";
  }
  throw std::invalid_argument(msg);
}

}  // namespace

std::vector<std::pair<int, bool>> supported_orders() {
  std::vector<std::pair<int, bool>> out;
  for (int n = 1; n <= 63; ++n) {
    if (explicit_recipes().count(n))
      out.emplace_back(n, !is_partial_order(n));
    else if (is_squarefree_supported(n))
      out.emplace_back(n, true);
  }
  return out;
}

bool is_supported_order(int n) {
  return (n >= 1 && explicit_recipes().count(n)) || is_squarefree_supported(n);
}

int fixture_group_count(int n) {
  const auto it = fixture_counts().find(n);
  if (it == fixture_counts().end())
    throw std::invalid_argument("no fixture count for order " + std::to_string(n));
  return it->second;
}

CatalogEntry catalog_entry(int n) {
  if (!is_supported_order(n)) unsupported(n);
  CatalogEntry e;
  e.n = n;
  e.fixture_count = fixture_group_count(n);
  if (const auto it = explicit_recipes().find(n); it != explicit_recipes().end()) {
    e.recipes = it->second;
    e.complete = !is_partial_order(n);
  } else {
    e.recipes = squarefree_recipes(n);
    e.complete = true;
  }
  return e;
}

nlohmann::json CatalogEntry::to_json() const {
  return nlohmann::json{{"n", n},
                        {"complete", complete},
                        {"count", fixture_count},
                        {"groups", recipes}};
}

CatalogGroups groups_of_order(int n) {
  const CatalogEntry e = catalog_entry(n);
  CatalogGroups out;
  out.n = e.n;
  out.complete = e.complete;
  out.fixture_count = e.fixture_count;
  out.groups.reserve(e.recipes.size());
  for (const std::string& r : e.recipes) out.groups.push_back(build_spec(r));
  return out;
}

std::string find_iso_class(const FiniteGroup& g) {
  const int n = g.order();
  if (!is_supported_order(n)) unsupported(n);
  const CatalogEntry e = catalog_entry(n);
  if (!e.complete)
    throw std::invalid_argument("order " + std::to_string(n) +
                                " is only partially catalogued");
  for (const std::string& r : e.recipes)
    if (is_isomorphic(g, build_spec(r))) return r;
  throw std::logic_error(
      "internal consistency failure: no catalog class matches a group of "
      "complete order " +
      std::to_string(n));
}

}  // namespace gclt
