#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace gclt {

// Element of a group, identified by its row/column index in the Cayley table.
using Elem = int;

// Guard for subgroup-lattice enumeration and brute-force subgroup searches.
inline constexpr int kDefaultEnumerationBound = 400;

// Hard cap on Cayley-table construction; tables are order^2 ints.
inline constexpr int kMaxGroupOrder = 4096;

// An explicit finite group given by its full Cayley table.
//
// Element 0 is always the identity. Instances are immutable once constructed
// and safe to share across threads. Construction validates the table axioms:
// identity row/column, two-sided inverses, Latin-square rows and columns, and
// associativity (exhaustive up to order 64, 10*n^2 seeded random triples
// above that).
class FiniteGroup {
 public:
  // table is row-major with table[x*order + y] = x*y.
  FiniteGroup(int order, std::vector<Elem> table, std::string spec = "");

  int order() const { return order_; }
  Elem mul(Elem x, Elem y) const {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }
  Elem inv(Elem x) const { return inverse_[static_cast<std::size_t>(x)]; }
  Elem pow(Elem x, long long e) const;

  // Smallest k >= 1 with x^k = e; always divides order().
  int element_order(Elem x) const;
  std::vector<int> element_orders() const;
  // order -> number of elements of that order
  std::map<int, int> order_profile() const;

  // Constructor expression this group was built from; empty for derived
  // groups such as quotients.
  const std::string& spec() const { return spec_; }

  // {"order": n, "spec": string, "table": [[...], ...]}
  nlohmann::json to_json() const;
  static FiniteGroup from_json(const nlohmann::json& j);

  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  int order_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::string spec_;

  void validate() const;
};

// An element-index subset of a parent group, closed under product and
// inverse. Holds a pointer to the parent, which must outlive the subgroup.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, std::vector<Elem> elements);

  const FiniteGroup& parent() const { return *parent_; }
  const std::vector<Elem>& elements() const { return elements_; }  // sorted
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(Elem x) const {
    return (mask_[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1;
  }
  const std::vector<std::uint64_t>& mask() const { return mask_; }

  bool is_whole_group() const { return order() == parent_->order(); }
  bool same_elements(const Subgroup& other) const {
    return parent_ == other.parent_ && mask_ == other.mask_;
  }

  // The subgroup as a standalone group. Elements are renumbered in ascending
  // order, so the parent identity (always a member) stays at index 0.
  FiniteGroup as_group() const;

 private:
  const FiniteGroup* parent_;
  std::vector<Elem> elements_;
  std::vector<std::uint64_t> mask_;
};

}  // namespace gclt
