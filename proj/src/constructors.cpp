#include "gclt/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gclt {

namespace {

std::string join_parts(std::span<const int> parts) {
  std::string s = "A";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(parts[i]);
  }
  return s;
}

long long checked_order(long long v) {
  if (v < 1 || v > kMaxGroupOrder)
    throw std::invalid_argument("requested group order " + std::to_string(v) +
                                " is outside 1.." + std::to_string(kMaxGroupOrder));
  return v;
}

bool is_power_of_two(int v) { return v >= 1 && (v & (v - 1)) == 0; }

// Same table under a family-specific spec name.
FiniteGroup rename(const FiniteGroup& g, std::string spec) {
  const int n = g.order();
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t[static_cast<std::size_t>(x) * n + y] = g.mul(x, y);
  return FiniteGroup(n, std::move(t), std::move(spec));
}

// Cycle-notation rendering; fixed points omitted, identity rendered as "()".
std::string perm_cycles(const std::vector<int>& img) {
  const int deg = static_cast<int>(img.size());
  std::string out;
  std::vector<char> seen(deg, 0);
  for (int start = 0; start < deg; ++start) {
    if (seen[start] || img[start] == start) continue;
    out += '(';
    int cur = start;
    bool first = true;
    while (!seen[cur]) {
      seen[cur] = 1;
      if (!first) out += ' ';
      out += std::to_string(cur + 1);
      first = false;
      cur = img[cur];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace

FiniteGroup cyclic(int n) {
  checked_order(n);
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  return FiniteGroup(n, std::move(table), "C" + std::to_string(n));
}

FiniteGroup abelian(std::span<const int> parts) {
  if (parts.empty()) throw std::invalid_argument("abelian: empty part list");
  long long n = 1;
  for (const int p : parts) {
    if (p < 1) throw std::invalid_argument("abelian: parts must be positive");
    n = checked_order(n * p);
  }
  const int order = static_cast<int>(n);
  const int k = static_cast<int>(parts.size());

  std::vector<int> digits(k);
  auto decode = [&](int idx) {
    for (int t = 0; t < k; ++t) {
      digits[t] = idx % parts[t];
      idx /= parts[t];
    }
  };
  std::vector<int> other(k);
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i) {
    decode(i);
    other = digits;
    for (int j = 0; j < order; ++j) {
      decode(j);
      int idx = 0;
      for (int t = k - 1; t >= 0; --t)
        idx = idx * parts[t] + (other[t] + digits[t]) % parts[t];
      table[static_cast<std::size_t>(i) * order + j] = idx;
    }
  }
  return FiniteGroup(order, std::move(table), join_parts(parts));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const long long n = checked_order(static_cast<long long>(g.order()) * h.order());
  const int order = static_cast<int>(n);
  const int hn = h.order();
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a) {
    const int ga = a / hn, ha = a % hn;
    for (int b = 0; b < order; ++b) {
      const int gb = b / hn, hb = b % hn;
      table[static_cast<std::size_t>(a) * order + b] =
          g.mul(ga, gb) * hn + h.mul(ha, hb);
    }
  }
  std::string spec;
  if (!g.spec().empty() && !h.spec().empty()) spec = g.spec() + "x" + h.spec();
  return FiniteGroup(order, std::move(table), std::move(spec));
}

FiniteGroup metacyclic(int m, int n, int r) {
  if (m < 1 || n < 1) throw std::invalid_argument("metacyclic: m, n must be positive");
  if (r < 0 || (m > 1 && r >= m))
    throw std::invalid_argument("metacyclic: r must lie in 0..m-1");
  checked_order(static_cast<long long>(m) * n);

  // r^j mod m for j < n, and the order condition r^n = 1 (mod m).
  std::vector<long long> rpow(n + 1);
  rpow[0] = 1 % m;
  for (int j = 1; j <= n; ++j) rpow[j] = (rpow[j - 1] * r) % m;
  if (rpow[n] != 1 % m)
    throw std::invalid_argument("metacyclic: condition r^n = 1 (mod m) violated");

  const int order = m * n;
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) {
      const int a = j * m + i;
      for (int j2 = 0; j2 < n; ++j2)
        for (int i2 = 0; i2 < m; ++i2) {
          const int b = j2 * m + i2;
          const int ii = static_cast<int>((i + rpow[j] * i2) % m);
          const int jj = (j + j2) % n;
          table[static_cast<std::size_t>(a) * order + b] = jj * m + ii;
        }
    }
  return FiniteGroup(order, std::move(table),
                     "M(" + std::to_string(m) + "," + std::to_string(n) + "," +
                         std::to_string(r) + ")");
}

FiniteGroup dihedral(int n) {
  if (n < 2) throw std::invalid_argument("dihedral: n must be at least 2");
  return rename(metacyclic(n, 2, n - 1), "D" + std::to_string(n));
}

FiniteGroup dicyclic(int n) {
  if (n < 2) throw std::invalid_argument("dicyclic: n must be at least 2");
  checked_order(4LL * n);
  const int order = 4 * n;
  const int tn = 2 * n;
  // a^i -> i, a^i b -> 2n + i; b^2 = a^n, b a b^-1 = a^-1.
  auto idx = [&](int i, int bpart) { return bpart ? tn + i : i; };
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  for (int bi = 0; bi < 2; ++bi)
    for (int i = 0; i < tn; ++i)
      for (int bj = 0; bj < 2; ++bj)
        for (int j = 0; j < tn; ++j) {
          int ii, bb;
          if (!bi && !bj) {
            ii = (i + j) % tn;
            bb = 0;
          } else if (!bi && bj) {  // a^i * a^j b = a^{i+j} b
            ii = (i + j) % tn;
            bb = 1;
          } else if (bi && !bj) {  // a^i b * a^j = a^{i-j} b
            ii = ((i - j) % tn + tn) % tn;
            bb = 1;
          } else {  // a^i b * a^j b = a^{i-j+n}
            ii = ((i - j + n) % tn + tn) % tn;
            bb = 0;
          }
          table[static_cast<std::size_t>(idx(i, bi)) * order + idx(j, bj)] = idx(ii, bb);
        }
  return FiniteGroup(order, std::move(table), "Dic" + std::to_string(n));
}

FiniteGroup semidihedral(int two_power) {
  if (!is_power_of_two(two_power) || two_power < 16)
    throw std::invalid_argument("semidihedral: order must be 2^k with k >= 4");
  const int m = two_power / 2;
  return rename(metacyclic(m, 2, m / 2 - 1), "SD" + std::to_string(two_power));
}

FiniteGroup generalized_quaternion(int two_power) {
  if (!is_power_of_two(two_power) || two_power < 8)
    throw std::invalid_argument(
        "generalized_quaternion: order must be 2^k with k >= 3");
  return rename(dicyclic(two_power / 4), "Q" + std::to_string(two_power));
}

namespace {

std::vector<std::vector<int>> mat_mul(const std::vector<std::vector<int>>& a,
                                      const std::vector<std::vector<int>>& b, int p) {
  const int k = static_cast<int>(a.size());
  std::vector<std::vector<int>> c(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < k; ++t)
      for (int j = 0; j < k; ++j)
        c[i][j] = (c[i][j] + a[i][t] * b[t][j]) % p;
  return c;
}

bool mat_is_identity(const std::vector<std::vector<int>>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

// Gaussian elimination over F_p.
bool mat_invertible(std::vector<std::vector<int>> a, int p) {
  const int k = static_cast<int>(a.size());
  for (int col = 0; col < k; ++col) {
    int pivot = -1;
    for (int row = col; row < k; ++row)
      if (a[row][col] % p != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return false;
    std::swap(a[col], a[pivot]);
    for (int row = 0; row < k; ++row) {
      if (row == col) continue;
      while (a[row][col] % p != 0)
        for (int j = 0; j < k; ++j) a[row][j] = (a[row][j] + a[col][j]) % p;
    }
  }
  return true;
}

std::string mat_spec(const std::vector<std::vector<int>>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ';';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(m[i][j]);
    }
  }
  s += ']';
  return s;
}

}  // namespace

FiniteGroup elementary_semidirect(int p, int k,
                                  const std::vector<std::vector<int>>& mat,
                                  int m) {
  if (p < 2) throw std::invalid_argument("elementary_semidirect: p must be prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw std::invalid_argument("elementary_semidirect: p must be prime");
  if (k < 1 || m < 1)
    throw std::invalid_argument("elementary_semidirect: k and m must be positive");
  if (mat.size() != static_cast<std::size_t>(k))
    throw std::invalid_argument("elementary_semidirect: matrix must be k x k");
  std::vector<std::vector<int>> norm(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    if (mat[i].size() != static_cast<std::size_t>(k))
      throw std::invalid_argument("elementary_semidirect: matrix must be k x k");
    for (int j = 0; j < k; ++j) norm[i][j] = ((mat[i][j] % p) + p) % p;
  }
  if (!mat_invertible(norm, p))
    throw std::invalid_argument(
        "elementary_semidirect: matrix is not invertible over F_p");

  long long pk = 1;
  for (int i = 0; i < k; ++i) pk = checked_order(pk * p);
  const long long n = checked_order(pk * m);

  // Powers M^j for j < m, plus the order condition M^m = I.
  std::vector<std::vector<std::vector<int>>> pows(m + 1);
  pows[0].assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) pows[0][i][i] = 1;
  for (int j = 1; j <= m; ++j) pows[j] = mat_mul(pows[j - 1], norm, p);
  if (!mat_is_identity(pows[m]))
    throw std::invalid_argument("elementary_semidirect: condition M^m = I violated");

  const int order = static_cast<int>(n);
  const int vn = static_cast<int>(pk);
  std::vector<int> va(k), vb(k);
  auto decode = [&](int idx, std::vector<int>& v) {
    for (int t = 0; t < k; ++t) {
      v[t] = idx % p;
      idx /= p;
    }
  };
  auto encode = [&](const std::vector<int>& v) {
    int idx = 0;
    for (int t = k - 1; t >= 0; --t) idx = idx * p + v[t];
    return idx;
  };

  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  std::vector<int> acted(k);
  for (int j = 0; j < m; ++j)
    for (int vi = 0; vi < vn; ++vi) {
      const int a = j * vn + vi;
      decode(vi, va);
      for (int j2 = 0; j2 < m; ++j2)
        for (int vi2 = 0; vi2 < vn; ++vi2) {
          const int b = j2 * vn + vi2;
          decode(vi2, vb);
          for (int row = 0; row < k; ++row) {
            int acc = va[row];
            for (int col = 0; col < k; ++col) acc += pows[j][row][col] * vb[col];
            acted[row] = acc % p;
          }
          table[static_cast<std::size_t>(a) * order + b] =
              ((j + j2) % m) * vn + encode(acted);
        }
    }
  return FiniteGroup(order, std::move(table),
                     "E(" + std::to_string(p) + "," + std::to_string(k) + "," +
                         mat_spec(norm) + "," + std::to_string(m) + ")");
}

FiniteGroup from_permutations(int degree,
                              const std::vector<std::vector<int>>& generators,
                              int bound) {
  if (degree < 1) throw std::invalid_argument("from_permutations: degree must be positive");
  for (const auto& gen : generators) {
    if (gen.size() != static_cast<std::size_t>(degree))
      throw std::invalid_argument("from_permutations: generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (const int v : gen) {
      if (v < 0 || v >= degree || seen[v]++)
        throw std::invalid_argument("from_permutations: not a permutation");
    }
  }

  std::vector<int> identity(degree);
  std::iota(identity.begin(), identity.end(), 0);

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems{identity};
  index[identity] = 0;
  auto compose = [&](const std::vector<int>& f, const std::vector<int>& g2) {
    std::vector<int> h(degree);
    for (int i = 0; i < degree; ++i) h[i] = f[g2[i]];
    return h;
  };
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& gen : generators) {
      auto prod = compose(elems[qi], gen);
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(prod));
        if (static_cast<int>(elems.size()) > bound)
          throw std::invalid_argument(
              "from_permutations: generated order exceeds bound " +
              std::to_string(bound));
      }
    }
  }

  const int order = static_cast<int>(elems.size());
  std::vector<Elem> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      table[static_cast<std::size_t>(i) * order + j] = index.at(compose(elems[i], elems[j]));

  std::string spec = "P(" + std::to_string(degree) + ";";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) spec += ',';
    spec += perm_cycles(generators[i]);
  }
  spec += ')';
  return FiniteGroup(order, std::move(table), std::move(spec));
}

}  // namespace gclt
