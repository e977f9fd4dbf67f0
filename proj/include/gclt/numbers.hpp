#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace gclt {

// Arithmetic classifiers work on desk-scale inputs only.
inline constexpr long long kMaxClassifiedN = 1'000'000;

struct PrimePower {
  long long p;
  int a;
  bool operator==(const PrimePower&) const = default;
};

// Prime factorization with strictly increasing primes.
struct Factorization {
  long long n;
  std::vector<PrimePower> factors;

  bool is_prime_power() const { return factors.size() == 1; }
  bool is_squarefree() const;
  int distinct_primes() const { return static_cast<int>(factors.size()); }
};

Factorization factorize(long long n);
long long tau(long long n);
long long phi(long long n);
std::vector<long long> prime_set(long long n);
std::vector<long long> divisors(long long n);  // ascending
long long gcd_ll(long long a, long long b);
bool is_prime(long long n);
// Multiplicative order of r mod m; r must be coprime to m.
long long multiplicative_order(long long r, long long m);

// gcd(n, phi(n)) == 1: every group of order n is cyclic.
bool is_cyclic_number(long long n);

// Cubefree and no p_i divides p_j^k - 1 for i != j, k <= a_j: every group of
// order n is abelian.
bool is_abelian_number(long long n);

// Cyclic number, or n = p*q with p, q prime (not necessarily distinct).
bool is_cclt_number(long long n);

// Abelian number; or pq with distinct primes; or p^m with m <= 4; or p^2*q
// with either p = 2 and q = 4k+3 (k >= 1), or p | q-1, p^2 ∤ q-1, p ∤ q+1
// and q ∤ p^2-1.
bool is_aclt_number(long long n);

// Number of isomorphism classes of CCLT groups of order n, for n with at
// least two distinct prime factors: 2 when n = p^r*q with p | q-1, else 1.
int g_cclt_count(long long n);

// Shapes covered by the closed-form subgroup counts.
struct CyclicShape {
  long long n;
};
struct AbelianPrimePowerShape {  // C_p x C_{p^{k-1}}, k >= 2
  long long p;
  int k;
};
struct MetacyclicPrqShape {  // the non-cyclic CCLT group of order p^r*q, p | q-1
  long long p;
  int r;
  long long q;
};
using CountShape = std::variant<CyclicShape, AbelianPrimePowerShape, MetacyclicPrqShape>;

long long subgroup_count_closed_form(const CountShape& shape);
long long cyclic_subgroup_count_closed_form(const CountShape& shape);

struct NumberClass {
  long long n = 0;
  bool cyclic = false;
  bool abelian = false;
  bool cclt = false;
  bool aclt = false;
  std::map<std::string, std::string> reasons;  // flag -> matched clause

  nlohmann::json to_json() const;
  static std::string csv_header();  // n,cyclic,abelian,cclt,aclt
  std::string csv_row() const;
};

NumberClass classify(long long n);

}  // namespace gclt
