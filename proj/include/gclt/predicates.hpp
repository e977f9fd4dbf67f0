#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gclt/group.hpp"

namespace gclt {

bool is_abelian(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

struct DivisorWitness {
  bool found = false;
  std::optional<std::vector<Elem>> witness;  // element indices of a subgroup
};

// Per-divisor subgroup-existence report. For kinds "cclt" and "aclt" the keys
// are exactly the proper divisors d < n; for kind "clt" every divisor of n
// appears, including n itself.
struct DivisorWitnessReport {
  std::string group_spec;
  std::string kind;  // "clt" | "cclt" | "aclt"
  bool ok = false;
  std::map<int, DivisorWitness> divisors;

  // {"group":, "kind":, "ok":, "divisors": {"d": {"found":, "witness": [...]}}}
  nlohmann::json to_json() const;
};

// Subgroup of every order dividing |g| (converse of Lagrange).
DivisorWitnessReport is_clt_group(const FiniteGroup& g,
                                  int bound = kDefaultEnumerationBound);
// Cyclic subgroup of every order d | n with d < n.
DivisorWitnessReport is_cclt_group(const FiniteGroup& g,
                                   int bound = kDefaultEnumerationBound);
// Abelian subgroup of every order d | n with d < n.
DivisorWitnessReport is_aclt_group(const FiniteGroup& g,
                                   int bound = kDefaultEnumerationBound);

// Some cyclic normal subgroup has cyclic quotient.
bool is_metacyclic(const FiniteGroup& g, int bound = kDefaultEnumerationBound);

bool is_z_group(const FiniteGroup& g);  // all Sylow subgroups cyclic
bool is_a_group(const FiniteGroup& g);  // all Sylow subgroups abelian
bool is_metabelian(const FiniteGroup& g);
// Huppert criterion: every maximal subgroup has prime index.
bool is_supersolvable(const FiniteGroup& g, int bound = kDefaultEnumerationBound);
bool is_nilpotent(const FiniteGroup& g);  // every Sylow subgroup normal
bool is_minimal_noncyclic(const FiniteGroup& g,
                          int bound = kDefaultEnumerationBound);
bool is_minimal_nonabelian(const FiniteGroup& g,
                           int bound = kDefaultEnumerationBound);

// Direct-product characterizations evaluated without building h x k.
// CCLT: both cyclic and (coprime orders, or combined shape C_p x C_{p^k});
// a trivial factor leaves the product isomorphic to the other factor, so
// that factor's own CCLT status is returned instead.
bool product_cclt_expected(const FiniteGroup& h, const FiniteGroup& k);
// ACLT: both ACLT, at least one abelian, and when the other factor is
// nonabelian every prime dividing the abelian factor's order divides the
// nonabelian factor's order.
bool product_aclt_expected(const FiniteGroup& h, const FiniteGroup& k);

int count_subgroups(const FiniteGroup& g, int bound = kDefaultEnumerationBound);
int count_cyclic_subgroups(const FiniteGroup& g);

}  // namespace gclt
