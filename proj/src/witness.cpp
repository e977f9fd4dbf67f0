#include "gclt/witness.hpp"

#include <stdexcept>
#include <vector>

#include "gclt/constructors.hpp"
#include "gclt/group_ops.hpp"
#include "gclt/group_spec.hpp"
#include "gclt/numbers.hpp"

namespace gclt {

namespace {

// Smallest r >= 2 with multiplicative order exactly t mod m.
int smallest_root_of_order(long long t, long long m) {
  for (long long r = 2; r < m; ++r) {
    if (gcd_ll(r, m) != 1) continue;
    if (multiplicative_order(r, m) == t) return static_cast<int>(r);
  }
  throw std::invalid_argument("no element of order " + std::to_string(t) +
                              " mod " + std::to_string(m));
}

// Lexicographically least 2x2 matrix over F_p of multiplicative order
// exactly q (q prime).
std::vector<std::vector<int>> least_matrix_of_order(int p, long long q) {
  auto mul2 = [p](const std::vector<std::vector<int>>& a,
                  const std::vector<std::vector<int>>& b) {
    std::vector<std::vector<int>> c(2, std::vector<int>(2, 0));
    for (int i = 0; i < 2; ++i)
      for (int t = 0; t < 2; ++t)
        for (int j = 0; j < 2; ++j) c[i][j] = (c[i][j] + a[i][t] * b[t][j]) % p;
    return c;
  };
  const std::vector<std::vector<int>> id{{1, 0}, {0, 1}};
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if ((a * d - b * c) % p == 0) continue;
          const std::vector<std::vector<int>> m{{a, b}, {c, d}};
          if (m == id) continue;
          auto acc = m;
          for (long long e = 1; e < q; ++e) acc = mul2(acc, m);
          if (acc == id) return m;  // order divides prime q and m != I
        }
  throw std::invalid_argument("no matrix of order " + std::to_string(q) +
                              " in GL(2," + std::to_string(p) + ")");
}

// Nonabelian group of order p^a for a >= 3.
FiniteGroup nonabelian_prime_power(long long p, int a) {
  long long m = 1;
  for (int i = 0; i < a - 1; ++i) m *= p;
  long long s = 1;
  for (int i = 0; i < a - 2; ++i) s *= p;
  return metacyclic(static_cast<int>(m), static_cast<int>(p),
                    static_cast<int>(s + 1));
}

// Nonabelian group of order p_i * p_j^e (e <= 2) where p_i | p_j^e - 1.
FiniteGroup nonabelian_mixed(long long pi, long long pj, int e) {
  if (e == 1 || (pj - 1) % pi == 0) {
    long long m = pj;
    for (int t = 1; t < e; ++t) m *= pj;
    // needs p_i | p_j - 1 so the cyclic kernel admits an order-p_i action
    return metacyclic(static_cast<int>(m), static_cast<int>(pi),
                      smallest_root_of_order(pi, m));
  }
  // p_i | p_j + 1: act irreducibly on C_{p_j} x C_{p_j}.
  return elementary_semidirect(static_cast<int>(pj), 2,
                               least_matrix_of_order(static_cast<int>(pj), pi),
                               static_cast<int>(pi));
}

FiniteGroup times_cyclic(FiniteGroup g, long long rest) {
  if (rest == 1) return g;
  return direct_product(g, cyclic(static_cast<int>(rest)));
}

FiniteGroup a4() { return build_spec("P(4;(1 2 3),(1 2)(3 4))"); }

void verify_witness(Witness& w, int bound) {
  if (w.n > bound) {
    w.verified = false;
    return;
  }
  bool absent;
  const int d = static_cast<int>(w.failing_divisor);
  if (w.kind == "cclt")
    absent = !find_cyclic_subgroup_of_order(w.group, d).has_value();
  else
    absent = !find_abelian_subgroup_of_order(w.group, d).has_value();
  if (!absent)
    throw std::logic_error("witness verification failed for n = " +
                           std::to_string(w.n) + ", d = " + std::to_string(d));
  w.verified = true;
}

}  // namespace

nlohmann::json Witness::to_json() const {
  return nlohmann::json{{"n", n},
                        {"kind", kind},
                        {"clause", clause},
                        {"failing_divisor", failing_divisor},
                        {"verified", verified},
                        {"group", group.to_json()}};
}

Witness non_cclt_witness(long long n, int bound) {
  if (is_cclt_number(n))
    throw std::invalid_argument(std::to_string(n) + " is a CCLT number");
  const Factorization f = factorize(n);

  if (f.is_prime_power()) {
    // C_p x C_p x C_{p^{k-2}}, no cyclic subgroup of order p^{k-1}.
    const long long p = f.factors[0].p;
    const int k = f.factors[0].a;  // k >= 3 here
    long long tail = 1, failing = 1;
    for (int i = 0; i < k - 2; ++i) tail *= p;
    for (int i = 0; i < k - 1; ++i) failing *= p;
    const std::vector<int> parts{static_cast<int>(p), static_cast<int>(p),
                                 static_cast<int>(tail)};
    Witness w{n, "cclt", "prime-power", failing, abelian(parts), false};
    verify_witness(w, bound);
    return w;
  }

  if (f.is_squarefree()) {
    // Some p_i divides p_j - 1 since n is not a cyclic number; the
    // nonabelian group of order p_i*p_j kills the divisor p_i*p_j.
    for (const auto& fj : f.factors)
      for (const auto& fi : f.factors) {
        if (fi.p == fj.p || (fj.p - 1) % fi.p != 0) continue;
        FiniteGroup h = nonabelian_mixed(fi.p, fj.p, 1);
        Witness w{n, "cclt", "squarefree", fi.p * fj.p,
                  times_cyclic(std::move(h), n / (fi.p * fj.p)), false};
        verify_witness(w, bound);
        return w;
      }
    throw std::logic_error("squarefree non-CCLT number without p_i | p_j - 1");
  }

  // Mixed shape: pick the largest prime with exponent >= 2; the abelian
  // group C_{p_j} x C_{p_j^{a_j-1}} x C_rest has no cyclic subgroup of
  // order p_j^{a_j}.
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
    if (it->a < 2) continue;
    const long long p = it->p;
    long long pa = 1;
    for (int i = 0; i < it->a; ++i) pa *= p;
    FiniteGroup h = abelian(std::vector<int>{
        static_cast<int>(p), static_cast<int>(pa / p)});
    Witness w{n, "cclt", "mixed-exponent", pa,
              times_cyclic(std::move(h), n / pa), false};
    verify_witness(w, bound);
    return w;
  }
  throw std::logic_error("unreachable non-CCLT case");
}

namespace {

Witness aclt_p2q_witness(long long n, long long p, long long q, int bound) {
  if (p == 2) {
    if (q == 3) {
      Witness w{n, "aclt", "n=12-A4", 6, a4(), false};
      verify_witness(w, bound);
      return w;
    }
    // q = 1 (mod 4): faithful C_q : C_4 has no abelian subgroup of order 2q.
    Witness w{n, "aclt", "4q-q=1mod4", 2 * q,
              metacyclic(static_cast<int>(q), 4, smallest_root_of_order(4, q)),
              false};
    verify_witness(w, bound);
    return w;
  }
  if ((p - 1) % q == 0) {
    // q | p-1: C_{p^2} : C_q, no abelian subgroup of order pq.
    Witness w{n, "aclt", "p2q-q-divides-p-1", p * q,
              metacyclic(static_cast<int>(p * p), static_cast<int>(q),
                         smallest_root_of_order(q, p * p)),
              false};
    verify_witness(w, bound);
    return w;
  }
  if ((p + 1) % q == 0) {
    // q | p+1: (C_p x C_p) : C_q with irreducible action.
    Witness w{n, "aclt", "p2q-q-divides-p+1", p * q,
              elementary_semidirect(static_cast<int>(p), 2,
                                    least_matrix_of_order(static_cast<int>(p), q),
                                    static_cast<int>(q)),
              false};
    verify_witness(w, bound);
    return w;
  }
  if ((q - 1) % (p * p) == 0) {
    // p^2 | q-1: faithful C_q : C_{p^2}; the order-p subgroup of the top
    // still acts nontrivially, so no abelian subgroup of order pq.
    Witness w{n, "aclt", "p2q-p2-divides-q-1", p * q,
              metacyclic(static_cast<int>(q), static_cast<int>(p * p),
                         smallest_root_of_order(p * p, q)),
              false};
    verify_witness(w, bound);
    return w;
  }
  throw std::logic_error("p^2*q dispatch exhausted for n = " + std::to_string(n));
}

Witness aclt_p2q2_witness(long long n, long long p, long long q, int bound) {
  // 4(b)-like conditions: scalar order-p action of C_{p^2} on C_q x C_q.
  if ((q - 1) % p == 0 && (q - 1) % (p * p) != 0 && (q + 1) % p != 0 &&
      (p * p - 1) % q != 0) {
    const int a = smallest_root_of_order(p, q);
    Witness w{n, "aclt", "p2q2-scalar", p * p * q,
              elementary_semidirect(
                  static_cast<int>(q), 2,
                  {{a, 0}, {0, a}}, static_cast<int>(p * p)),
              false};
    verify_witness(w, bound);
    return w;
  }
  // Otherwise reuse a non-ACLT group of order p^2*q (or q^2*p) times the
  // leftover cyclic factor.
  if (!is_aclt_number(p * p * q)) {
    Witness inner = non_aclt_witness(p * p * q, bound);
    Witness w{n, "aclt", "p2q2-times-Cq", p * q * q,
              times_cyclic(std::move(inner.group), q), false};
    verify_witness(w, bound);
    return w;
  }
  if (!is_aclt_number(q * q * p)) {
    Witness inner = non_aclt_witness(q * q * p, bound);
    Witness w{n, "aclt", "p2q2-times-Cp", q * p * p,
              times_cyclic(std::move(inner.group), p), false};
    verify_witness(w, bound);
    return w;
  }
  throw std::logic_error("p^2*q^2 dispatch exhausted for n = " + std::to_string(n));
}

}  // namespace

Witness non_aclt_witness(long long n, int bound) {
  if (is_aclt_number(n))
    throw std::invalid_argument(std::to_string(n) + " is an ACLT number");
  const Factorization f = factorize(n);

  if (f.is_prime_power()) {
    const long long p = f.factors[0].p;
    const int m = f.factors[0].a;  // m >= 5 here
    long long failing = 1;
    for (int i = 0; i < m - 1; ++i) failing *= p;
    long long rest = 1;
    for (int i = 0; i < m - 5; ++i) rest *= p;
    FiniteGroup h =
        p == 2 ? elementary_semidirect(2, 3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, 4)
               : metacyclic(static_cast<int>(p * p * p), static_cast<int>(p * p),
                            smallest_root_of_order(p * p, p * p * p));
    Witness w{n, "aclt", p == 2 ? "prime-power-p2" : "prime-power-odd", failing,
              times_cyclic(std::move(h), rest), false};
    verify_witness(w, bound);
    return w;
  }

  if (f.is_squarefree()) {
    for (const auto& fj : f.factors)
      for (const auto& fi : f.factors) {
        if (fi.p == fj.p || (fj.p - 1) % fi.p != 0) continue;
        FiniteGroup h = nonabelian_mixed(fi.p, fj.p, 1);
        Witness w{n, "aclt", "squarefree", fi.p * fj.p,
                  times_cyclic(std::move(h), n / (fi.p * fj.p)), false};
        verify_witness(w, bound);
        return w;
      }
    throw std::logic_error("squarefree non-ACLT number without p_i | p_j - 1");
  }

  // Some exponent >= 3: a nonabelian group of order p_j^{a_j} times the
  // coprime rest lacks an abelian subgroup of order p_j^{a_j}.
  for (const auto& fj : f.factors) {
    if (fj.a < 3) continue;
    long long pa = 1;
    for (int i = 0; i < fj.a; ++i) pa *= fj.p;
    FiniteGroup h = nonabelian_prime_power(fj.p, fj.a);
    Witness w{n, "aclt", "exponent>=3", pa, times_cyclic(std::move(h), n / pa),
              false};
    verify_witness(w, bound);
    return w;
  }

  // All exponents <= 2 now.
  if (f.distinct_primes() >= 3) {
    for (const auto& fj : f.factors)
      for (const auto& fi : f.factors) {
        if (fi.p == fj.p) continue;
        long long pja = 1;
        for (int i = 0; i < fj.a; ++i) pja *= fj.p;
        if ((pja - 1) % fi.p != 0) continue;
        long long pia = 1;
        for (int i = 0; i < fi.a; ++i) pia *= fi.p;
        FiniteGroup h = nonabelian_mixed(fi.p, fj.p, fj.a);
        Witness w{n, "aclt", "three-primes", pia * pja,
                  times_cyclic(std::move(h), n / (fi.p * pja)), false};
        verify_witness(w, bound);
        return w;
      }
    throw std::logic_error("three-prime non-ACLT number without p_i | p_j^a - 1");
  }

  // Exactly two primes, exponents in {1, 2}; pq itself is always ACLT.
  const auto& f0 = f.factors[0];
  const auto& f1 = f.factors[1];
  if (f0.a + f1.a == 3) {
    const long long p = f0.a == 2 ? f0.p : f1.p;
    const long long q = f0.a == 2 ? f1.p : f0.p;
    return aclt_p2q_witness(n, p, q, bound);
  }
  return aclt_p2q2_witness(n, f0.p, f1.p, bound);
}

}  // namespace gclt
