#include "gclt/numbers.hpp"

#include <algorithm>
#include <stdexcept>

namespace gclt {

namespace {

void check_range(long long n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > kMaxClassifiedN)
    throw std::invalid_argument("n exceeds supported range " +
                                std::to_string(kMaxClassifiedN));
}

}  // namespace

bool Factorization::is_squarefree() const {
  for (const auto& f : factors)
    if (f.a > 1) return false;
  return true;
}

Factorization factorize(long long n) {
  check_range(n);
  Factorization f{n, {}};
  long long rest = n;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    int a = 0;
    while (rest % p == 0) {
      rest /= p;
      ++a;
    }
    f.factors.push_back({p, a});
  }
  if (rest > 1) f.factors.push_back({rest, 1});
  return f;
}

long long tau(long long n) {
  long long t = 1;
  for (const auto& f : factorize(n).factors) t *= f.a + 1;
  return t;
}

long long phi(long long n) {
  long long v = n;
  for (const auto& f : factorize(n).factors) v = v / f.p * (f.p - 1);
  return v;
}

std::vector<long long> prime_set(long long n) {
  std::vector<long long> out;
  for (const auto& f : factorize(n).factors) out.push_back(f.p);
  return out;
}

std::vector<long long> divisors(long long n) {
  check_range(n);
  std::vector<long long> out{1};
  for (const auto& f : factorize(n).factors) {
    const std::size_t base = out.size();
    long long pk = 1;
    for (int e = 1; e <= f.a; ++e) {
      pk *= f.p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long gcd_ll(long long a, long long b) {
  while (b) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long multiplicative_order(long long r, long long m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  r %= m;
  if (r < 0) r += m;
  if (m == 1) return 1;
  if (gcd_ll(r, m) != 1)
    throw std::invalid_argument("multiplicative_order: r not coprime to m");
  long long v = r % m, k = 1;
  while (v != 1) {
    v = v * r % m;
    ++k;
  }
  return k;
}

bool is_cyclic_number(long long n) {
  check_range(n);
  return gcd_ll(n, phi(n)) == 1;
}

bool is_abelian_number(long long n) {
  const Factorization f = factorize(n);
  for (const auto& pp : f.factors)
    if (pp.a > 2) return false;
  for (const auto& pi : f.factors)
    for (const auto& pj : f.factors) {
      if (pi.p == pj.p) continue;
      long long pk = 1;
      for (int k = 1; k <= pj.a; ++k) {
        pk *= pj.p;
        if ((pk - 1) % pi.p == 0) return false;
      }
    }
  return true;
}

bool is_cclt_number(long long n) {
  if (is_cyclic_number(n)) return true;
  const Factorization f = factorize(n);
  if (f.factors.size() == 1 && f.factors[0].a == 2) return true;  // p^2
  if (f.factors.size() == 2 && f.factors[0].a == 1 && f.factors[1].a == 1)
    return true;  // pq
  return false;
}

namespace {

// Clause of the ACLT-number characterization matched by n, or "" if none.
std::string aclt_clause(long long n) {
  if (is_abelian_number(n)) return "abelian-number";
  const Factorization f = factorize(n);
  if (f.factors.size() == 2 && f.factors[0].a == 1 && f.factors[1].a == 1)
    return "pq-distinct";
  if (f.factors.size() == 1 && f.factors[0].a <= 4) return "prime-power-m<=4";
  if (f.factors.size() == 2) {
    long long p = 0, q = 0;
    if (f.factors[0].a == 2 && f.factors[1].a == 1) {
      p = f.factors[0].p;
      q = f.factors[1].p;
    } else if (f.factors[0].a == 1 && f.factors[1].a == 2) {
      p = f.factors[1].p;
      q = f.factors[0].p;
    }
    if (p != 0) {
      // p^2*q, clause 4(a): p = 2 and q = 4k+3 with k >= 1.
      if (p == 2 && q % 4 == 3 && q >= 7) return "p2q-4a";
      // clause 4(b), verbatim.
      if ((q - 1) % p == 0 && (q - 1) % (p * p) != 0 && (q + 1) % p != 0 &&
          (p * p - 1) % q != 0)
        return "p2q-4b";
    }
  }
  return "";
}

}  // namespace

bool is_aclt_number(long long n) { return !aclt_clause(n).empty(); }

int g_cclt_count(long long n) {
  const Factorization f = factorize(n);
  if (f.factors.size() < 2)
    throw std::invalid_argument(
        "g_cclt_count: formula domain excludes prime powers");
  if (f.factors.size() == 2) {
    for (int side = 0; side < 2; ++side) {
      const auto& pr = f.factors[side];      // p^r
      const auto& qs = f.factors[1 - side];  // q
      if (qs.a == 1 && (qs.p - 1) % pr.p == 0) return 2;
    }
  }
  return 1;
}

long long subgroup_count_closed_form(const CountShape& shape) {
  if (const auto* c = std::get_if<CyclicShape>(&shape)) {
    return tau(c->n);
  }
  if (const auto* a = std::get_if<AbelianPrimePowerShape>(&shape)) {
    if (!is_prime(a->p) || a->k < 2)
      throw std::invalid_argument("shape requires prime p and k >= 2");
    return 2 + (a->p + 1) * (a->k - 1);
  }
  const auto& m = std::get<MetacyclicPrqShape>(shape);
  if (!is_prime(m.p) || !is_prime(m.q) || m.p == m.q || m.r < 1 ||
      (m.q - 1) % m.p != 0)
    throw std::invalid_argument(
        "shape requires distinct primes with p | q-1 and r >= 1");
  return 2 * m.r + m.q + 1;
}

long long cyclic_subgroup_count_closed_form(const CountShape& shape) {
  if (const auto* c = std::get_if<CyclicShape>(&shape)) {
    return tau(c->n);
  }
  if (const auto* a = std::get_if<AbelianPrimePowerShape>(&shape)) {
    if (!is_prime(a->p) || a->k < 2)
      throw std::invalid_argument("shape requires prime p and k >= 2");
    return (a->k - 1) * a->p + 2;
  }
  const auto& m = std::get<MetacyclicPrqShape>(shape);
  if (!is_prime(m.p) || !is_prime(m.q) || m.p == m.q || m.r < 1 ||
      (m.q - 1) % m.p != 0)
    throw std::invalid_argument(
        "shape requires distinct primes with p | q-1 and r >= 1");
  return 2 * m.r + m.q;
}

NumberClass classify(long long n) {
  check_range(n);
  NumberClass c;
  c.n = n;
  c.cyclic = is_cyclic_number(n);
  c.reasons["cyclic"] = c.cyclic ? "gcd(n,phi(n))=1" : "none";
  c.abelian = is_abelian_number(n);
  c.reasons["abelian"] =
      c.abelian ? "cubefree-and-no-p_i-divides-p_j^k-1" : "none";
  c.cclt = is_cclt_number(n);
  if (c.cyclic)
    c.reasons["cclt"] = "cyclic-number";
  else if (c.cclt)
    c.reasons["cclt"] = "n=pq";
  else
    c.reasons["cclt"] = "none";
  const std::string aclt = aclt_clause(n);
  c.aclt = !aclt.empty();
  c.reasons["aclt"] = c.aclt ? aclt : "none";
  return c;
}

nlohmann::json NumberClass::to_json() const {
  return nlohmann::json{{"n", n},       {"cyclic", cyclic}, {"abelian", abelian},
                        {"cclt", cclt}, {"aclt", aclt},     {"reasons", reasons}};
}

std::string NumberClass::csv_header() { return "n,cyclic,abelian,cclt,aclt"; }

std::string NumberClass::csv_row() const {
  auto b = [](bool v) { return v ? "1" : "0"; };
  return std::to_string(n) + "," + b(cyclic) + "," + b(abelian) + "," + b(cclt) +
         "," + b(aclt);
}

}  // namespace gclt
