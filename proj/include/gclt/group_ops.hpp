#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gclt/group.hpp"

namespace gclt {

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);

// Smallest subgroup containing every element of gens.
Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens);

// One subgroup per distinct <x>, ordered by (order, elements).
std::vector<Subgroup> all_cyclic_subgroups(const FiniteGroup& g);

// Every subgroup, found by seeding with cyclic subgroups and closing the set
// under pairwise joins <A u B> until a fixpoint. Ordered by (order, elements).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                    int bound = kDefaultEnumerationBound);

Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);

// h must be a subgroup of g (same parent object).
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

// A subgroup of order p^a where p^a exactly divides |g| (order 1 if p does
// not divide |g|), grown inside successive normalizers.
Subgroup sylow_subgroup(const FiniteGroup& g, long long p);

// Group on the cosets of n, which must be normal. The identity coset has
// index 0; coset numbering follows first appearance when scanning elements.
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);

// Bijective-homomorphism existence: order and element-order profile first,
// then backtracking over images of a greedy generating sequence.
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// Exhaustive order-d subgroup searches with sound pruning; independent of
// all_subgroups. Return std::nullopt when no such subgroup exists.
std::optional<Subgroup> find_cyclic_subgroup_of_order(const FiniteGroup& g, int d);
std::optional<Subgroup> find_subgroup_of_order(const FiniteGroup& g, int d);

// Reusable searcher for abelian subgroups of a fixed group; precomputes
// per-element centralizer bitmasks once.
class AbelianSubgroupSearch {
 public:
  explicit AbelianSubgroupSearch(const FiniteGroup& g);
  std::optional<Subgroup> find(int d) const;

 private:
  const FiniteGroup* g_;
  std::size_t words_;
  std::vector<std::uint64_t> centralizers_;  // n stripes of `words_` each
};

std::optional<Subgroup> find_abelian_subgroup_of_order(const FiniteGroup& g, int d);

}  // namespace gclt
