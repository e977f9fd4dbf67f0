#pragma once

#include <string>

#include <json.hpp>

#include "gclt/group.hpp"

namespace gclt {

// An explicit group of order n lacking a cyclic (kind "cclt") or abelian
// (kind "aclt") subgroup of order failing_divisor.
struct Witness {
  long long n = 0;
  std::string kind;
  std::string clause;  // construction case that produced the group
  long long failing_divisor = 0;
  FiniteGroup group;
  bool verified = false;  // brute-force check ran (only when n <= bound)

  nlohmann::json to_json() const;
};

// Witness for a non-CCLT number n. Cases:
//   p^k (k >= 3)          -> C_p x C_p x C_{p^{k-2}}, failing p^{k-1}
//   squarefree (k >= 3)   -> (C_{p_j} : C_{p_i}) x C_rest, failing p_i*p_j
//   some exponent >= 2    -> (C_{p_j} x C_{p_j^{a_j-1}}) x C_rest, failing p_j^{a_j}
// The failure is re-verified by brute force when n <= bound; a failed
// verification is an internal error.
Witness non_cclt_witness(long long n, int bound = kDefaultEnumerationBound);

// Witness for a non-ACLT number n, following the case split on the shape of
// n (squarefree, prime power, high exponent, three or more primes, p^2*q,
// p^2*q^2). n = 12 yields the alternating group on 4 points.
Witness non_aclt_witness(long long n, int bound = kDefaultEnumerationBound);

}  // namespace gclt
