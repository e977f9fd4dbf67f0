#pragma once

#include <span>
#include <vector>

#include "gclt/group.hpp"

namespace gclt {

// Addition mod n; element 1 generates.
FiniteGroup cyclic(int n);

// Direct sum of cyclic groups of the given orders, mixed-radix encoding with
// the first part least significant.
FiniteGroup abelian(std::span<const int> parts);

// Componentwise product; pair (g, h) gets index g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// <a, b | a^m = b^n = e, b a b^-1 = a^r> with r^n = 1 (mod m).
// Pair (i, j) — a^i b^j — gets index j*m + i, so a is element 1 and b is
// element m, and (i,j)(i',j') = (i + r^j i', j + j').
FiniteGroup metacyclic(int m, int n, int r);

FiniteGroup dihedral(int n);  // order 2n, n >= 2
FiniteGroup dicyclic(int n);  // order 4n, n >= 2; unique involution a^n = b^2

FiniteGroup semidihedral(int two_power);           // order 2^k, k >= 4
FiniteGroup generalized_quaternion(int two_power);  // order 2^k, k >= 3

// (C_p)^k semidirect C_m, the generator of C_m acting as the k x k matrix
// mat over F_p. Requires mat invertible and mat^m = I; the action may have a
// kernel. Vectors are indexed with digit 0 least significant; the C_m
// generator is element p^k.
FiniteGroup elementary_semidirect(int p, int k,
                                  const std::vector<std::vector<int>>& mat,
                                  int m);

// Cayley table of the permutation group generated by the given permutations
// (images arrays over 0..degree-1), elements ordered by BFS from the
// identity.
FiniteGroup from_permutations(int degree,
                              const std::vector<std::vector<int>>& generators,
                              int bound = kDefaultEnumerationBound);

}  // namespace gclt
