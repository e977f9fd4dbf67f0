#include "gclt/group_ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace gclt {

namespace {

struct MaskHash {
  std::size_t operator()(const std::vector<std::uint64_t>& m) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const std::uint64_t w : m) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

std::size_t mask_words(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

bool mask_test(const std::vector<std::uint64_t>& m, Elem x) {
  return (m[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1;
}

void mask_set(std::vector<std::uint64_t>& m, Elem x) {
  m[static_cast<std::size_t>(x) >> 6] |= 1ull << (x & 63);
}

int mask_popcount(const std::vector<std::uint64_t>& m) {
  int c = 0;
  for (const std::uint64_t w : m) c += __builtin_popcountll(w);
  return c;
}

std::vector<Elem> mask_elements(const std::vector<std::uint64_t>& m, int n) {
  std::vector<Elem> out;
  for (Elem x = 0; x < n; ++x)
    if (mask_test(m, x)) out.push_back(x);
  return out;
}

// Closure of gens under right multiplication, as a membership mask.
std::vector<std::uint64_t> closure_mask(const FiniteGroup& g,
                                        std::span<const Elem> gens) {
  const int n = g.order();
  std::vector<std::uint64_t> m(mask_words(n), 0);
  std::vector<Elem> queue{0};
  mask_set(m, 0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Elem x = queue[qi];
    for (const Elem s : gens) {
      const Elem y = g.mul(x, s);
      if (!mask_test(m, y)) {
        mask_set(m, y);
        queue.push_back(y);
      }
    }
  }
  return m;
}

// Greedy small generating set for a subgroup given as an element list.
std::vector<Elem> extract_generators(const FiniteGroup& g,
                                     const std::vector<Elem>& elems) {
  std::vector<Elem> gens;
  std::vector<std::uint64_t> have(mask_words(g.order()), 0);
  mask_set(have, 0);
  int covered = 1;
  for (const Elem x : elems) {
    if (mask_test(have, x)) continue;
    gens.push_back(x);
    have = closure_mask(g, gens);
    covered = mask_popcount(have);
    if (covered == static_cast<int>(elems.size())) break;
  }
  return gens;
}

void require_subgroup_of(const FiniteGroup& g, const Subgroup& h,
                         const char* what) {
  if (&h.parent() != &g)
    throw std::invalid_argument(std::string(what) +
                                ": subgroup does not belong to this group");
}

}  // namespace

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {0}); }

Subgroup full_subgroup(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  for (Elem x = 0; x < g.order(); ++x) all[x] = x;
  return Subgroup(g, std::move(all));
}

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  for (const Elem x : gens)
    if (x < 0 || x >= g.order()) throw std::out_of_range("generator index out of range");
  const auto m = closure_mask(g, gens);
  return Subgroup(g, mask_elements(m, g.order()));
}

std::vector<Subgroup> all_cyclic_subgroups(const FiniteGroup& g) {
  const int n = g.order();
  std::unordered_set<std::vector<std::uint64_t>, MaskHash> seen;
  std::vector<Subgroup> out;
  for (Elem x = 0; x < n; ++x) {
    const Elem gen[] = {x};
    auto m = closure_mask(g, gen);
    if (seen.insert(m).second) out.emplace_back(g, mask_elements(m, n));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int bound) {
  const int n = g.order();
  if (n > bound)
    throw std::invalid_argument("order " + std::to_string(n) +
                                " exceeds enumeration bound " + std::to_string(bound));

  struct Entry {
    std::vector<std::uint64_t> mask;
    std::vector<Elem> elems;
    std::vector<Elem> gens;
  };
  std::vector<Entry> list;
  std::unordered_set<std::vector<std::uint64_t>, MaskHash> seen;

  auto add = [&](std::vector<std::uint64_t> m) {
    if (!seen.insert(m).second) return;
    auto elems = mask_elements(m, n);
    auto gens = extract_generators(g, elems);
    list.push_back(Entry{std::move(m), std::move(elems), std::move(gens)});
  };

  for (Elem x = 0; x < n; ++x) {
    const Elem gen[] = {x};
    add(closure_mask(g, gen));
  }

  // Close under pairwise joins. New entries are appended and later paired
  // with everything before them, so each unordered pair is tried once.
  std::vector<Elem> joined;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      bool i_in_j = true, j_in_i = true;
      for (std::size_t w = 0; w < list[i].mask.size(); ++w) {
        if (list[i].mask[w] & ~list[j].mask[w]) i_in_j = false;
        if (list[j].mask[w] & ~list[i].mask[w]) j_in_i = false;
      }
      if (i_in_j || j_in_i) continue;  // join is the larger one
      joined = list[i].gens;
      joined.insert(joined.end(), list[j].gens.begin(), list[j].gens.end());
      add(closure_mask(g, joined));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(list.size());
  for (auto& e : list) out.emplace_back(g, std::move(e.elems));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

Subgroup center(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Elem> elems;
  for (Elem x = 0; x < n; ++x) {
    bool central = true;
    for (Elem y = 0; y < n && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) elems.push_back(x);
  }
  return Subgroup(g, std::move(elems));
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::uint64_t> seen(mask_words(n), 0);
  std::vector<Elem> gens;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
      if (!mask_test(seen, c)) {
        mask_set(seen, c);
        if (c != 0) gens.push_back(c);
      }
    }
  return generated_subgroup(g, gens);
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h, "centralizer");
  std::vector<Elem> elems;
  for (Elem x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (const Elem y : h.elements())
      if (g.mul(x, y) != g.mul(y, x)) {
        commutes = false;
        break;
      }
    if (commutes) elems.push_back(x);
  }
  return Subgroup(g, std::move(elems));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h, "normalizer");
  std::vector<Elem> elems;
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem xi = g.inv(x);
    bool normalizes = true;
    for (const Elem y : h.elements())
      if (!h.contains(g.mul(g.mul(x, y), xi))) {
        normalizes = false;
        break;
      }
    if (normalizes) elems.push_back(x);
  }
  return Subgroup(g, std::move(elems));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h, "is_normal");
  for (Elem x = 0; x < g.order(); ++x) {
    const Elem xi = g.inv(x);
    for (const Elem y : h.elements())
      if (!h.contains(g.mul(g.mul(x, y), xi))) return false;
  }
  return true;
}

Subgroup sylow_subgroup(const FiniteGroup& g, long long p) {
  if (p < 2) throw std::invalid_argument("sylow_subgroup: p must be prime");
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("sylow_subgroup: p must be prime");

  int target = 1;
  int n = g.order();
  while (n % p == 0) {
    n = static_cast<int>(n / p);
    target = static_cast<int>(target * p);
  }

  Subgroup sub = trivial_subgroup(g);
  while (sub.order() < target) {
    const Subgroup norm = normalizer(g, sub);
    // p divides [N(P):P], so some element has coset order divisible by p.
    bool grown = false;
    for (const Elem y : norm.elements()) {
      if (sub.contains(y)) continue;
      int coset_order = 1;
      Elem z = y;
      while (!sub.contains(z)) {
        z = g.mul(z, y);
        ++coset_order;
      }
      if (coset_order % p != 0) continue;
      const Elem x = g.pow(y, coset_order / p);  // x^p lies in sub, x does not
      std::vector<Elem> gens = sub.elements();
      gens.push_back(x);
      sub = generated_subgroup(g, gens);
      grown = true;
      break;
    }
    if (!grown)
      throw std::logic_error("sylow_subgroup: failed to grow p-subgroup");
  }
  return sub;
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  require_subgroup_of(g, n, "quotient");
  if (!is_normal(g, n))
    throw std::invalid_argument("quotient: subgroup is not normal");

  const int order = g.order();
  const int q = order / n.order();
  std::vector<int> coset_of(order, -1);
  std::vector<Elem> rep;
  rep.reserve(q);
  for (Elem x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(rep.size());
    rep.push_back(x);
    for (const Elem h : n.elements()) coset_of[g.mul(x, h)] = id;
  }

  std::vector<Elem> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[static_cast<std::size_t>(i) * q + j] = coset_of[g.mul(rep[i], rep[j])];
  return FiniteGroup(q, std::move(table));
}

namespace {

// Backtracking extension of a partial map gens[0..depth) -> b over the
// closure of the mapped generators.
class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& a, const FiniteGroup& b) : a_(a), b_(b) {
    orders_a_ = a.element_orders();
    orders_b_ = b.element_orders();
    std::vector<std::uint64_t> have(mask_words(a.order()), 0);
    mask_set(have, 0);
    std::vector<Elem> gens;
    for (Elem x = 0; x < a.order(); ++x) {
      if (mask_test(have, x)) continue;
      gens.push_back(x);
      have = closure_mask(a_, gens);
      if (mask_popcount(have) == a.order()) break;
    }
    gens_ = std::move(gens);
  }

  bool run() {
    std::vector<int> img(a_.order(), -1);
    std::vector<int> pre(b_.order(), -1);
    img[0] = 0;
    pre[0] = 0;
    std::vector<Elem> mapped{0};
    return extend(0, img, pre, mapped);
  }

 private:
  bool extend(std::size_t depth, std::vector<int>& img, std::vector<int>& pre,
              std::vector<Elem>& mapped) {
    if (depth == gens_.size()) return true;
    const Elem gen = gens_[depth];
    for (Elem h = 0; h < b_.order(); ++h) {
      if (pre[h] >= 0 || orders_b_[h] != orders_a_[gen]) continue;
      auto img2 = img;
      auto pre2 = pre;
      auto mapped2 = mapped;
      if (close(gen, h, img2, pre2, mapped2) &&
          extend(depth + 1, img2, pre2, mapped2))
        return true;
    }
    return false;
  }

  // Add gen -> h and close the partial map under products; false on conflict.
  bool close(Elem gen, Elem h, std::vector<int>& img, std::vector<int>& pre,
             std::vector<Elem>& mapped) const {
    img[gen] = h;
    pre[h] = gen;
    mapped.push_back(gen);
    // Product-close over the mapped set; mapped grows in place.
    for (std::size_t i = 0; i < mapped.size(); ++i) {
      for (std::size_t j = 0; j < mapped.size(); ++j) {
        const Elem x = mapped[i], y = mapped[j];
        const Elem z = a_.mul(x, y);
        const Elem w = b_.mul(img[x], img[y]);
        if (img[z] >= 0) {
          if (img[z] != w) return false;
        } else {
          if (pre[w] >= 0) return false;
          img[z] = w;
          pre[w] = z;
          mapped.push_back(z);
        }
      }
    }
    return true;
  }

  const FiniteGroup& a_;
  const FiniteGroup& b_;
  std::vector<int> orders_a_, orders_b_;
  std::vector<Elem> gens_;
};

}  // namespace

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (a.order_profile() != b.order_profile()) return false;
  return IsoSearch(a, b).run();
}

std::optional<Subgroup> find_cyclic_subgroup_of_order(const FiniteGroup& g, int d) {
  if (d < 1 || g.order() % d != 0) return std::nullopt;
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.element_order(x) == d) {
      const Elem gen[] = {x};
      return generated_subgroup(g, gen);
    }
  }
  return std::nullopt;
}

std::optional<Subgroup> find_subgroup_of_order(const FiniteGroup& g, int d) {
  if (d < 1 || g.order() % d != 0) return std::nullopt;
  if (d == 1) return trivial_subgroup(g);
  if (d == g.order()) return full_subgroup(g);

  const int n = g.order();
  // DFS over subgroups whose order divides d. Every order-d subgroup is
  // reachable through such a chain, so exhausting the space is a proof of
  // absence.
  std::unordered_set<std::vector<std::uint64_t>, MaskHash> visited;

  struct Frame {
    std::vector<std::uint64_t> mask;
    std::vector<Elem> gens;
    int order;
  };
  std::vector<Frame> stack;
  {
    std::vector<std::uint64_t> m(mask_words(n), 0);
    mask_set(m, 0);
    visited.insert(m);
    stack.push_back(Frame{std::move(m), {}, 1});
  }
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.order == d) return Subgroup(g, mask_elements(fr.mask, n));
    for (Elem x = 0; x < n; ++x) {
      if (mask_test(fr.mask, x)) continue;
      auto gens = fr.gens;
      gens.push_back(x);
      auto m = closure_mask(g, gens);
      const int o = mask_popcount(m);
      if (o > d || d % o != 0) continue;
      if (!visited.insert(m).second) continue;
      stack.push_back(Frame{std::move(m), std::move(gens), o});
    }
  }
  return std::nullopt;
}

AbelianSubgroupSearch::AbelianSubgroupSearch(const FiniteGroup& g)
    : g_(&g), words_(mask_words(g.order())) {
  const int n = g.order();
  centralizers_.assign(words_ * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x))
        centralizers_[words_ * x + (static_cast<std::size_t>(y) >> 6)] |=
            1ull << (y & 63);
}

std::optional<Subgroup> AbelianSubgroupSearch::find(int d) const {
  const FiniteGroup& g = *g_;
  const int n = g.order();
  if (d < 1 || n % d != 0) return std::nullopt;
  if (d == 1) return trivial_subgroup(g);

  // DFS over abelian subgroups A with |A| dividing d and d dividing
  // |C_G(A)|. Any abelian B of order d satisfies both constraints along the
  // whole chain {e} < ... < B (Lagrange inside B and inside C_G(A), since
  // B <= C_G(A)), so the search space covers every candidate; exhausting it
  // proves absence.
  struct Frame {
    std::vector<std::uint64_t> elems;
    std::vector<std::uint64_t> cent;
    std::vector<Elem> list;
    int order;
  };
  std::unordered_set<std::vector<std::uint64_t>, MaskHash> visited;
  std::vector<Frame> stack;
  {
    Frame root;
    root.elems.assign(words_, 0);
    mask_set(root.elems, 0);
    root.cent.assign(words_, ~0ull);
    if (n & 63) root.cent.back() = (1ull << (n & 63)) - 1;
    root.list = {0};
    root.order = 1;
    visited.insert(root.elems);
    stack.push_back(std::move(root));
  }

  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.order == d) return Subgroup(g, fr.list);

    for (Elem x = 0; x < n; ++x) {
      if (mask_test(fr.elems, x) || !mask_test(fr.cent, x)) continue;

      Frame next;
      next.elems = fr.elems;
      next.list = fr.list;
      // x centralizes A, so <A, x> = A<x> is abelian; absorb cosets A*x^t
      // until x^t falls into an already-absorbed coset.
      Elem xt = x;
      while (!mask_test(next.elems, xt)) {
        for (const Elem a : fr.list) {
          const Elem e2 = g.mul(a, xt);
          if (!mask_test(next.elems, e2)) {
            mask_set(next.elems, e2);
            next.list.push_back(e2);
          }
        }
        xt = g.mul(xt, x);
      }
      next.order = static_cast<int>(next.list.size());
      if (next.order > d || d % next.order != 0) continue;
      if (!visited.insert(next.elems).second) continue;

      next.cent.resize(words_);
      for (std::size_t w = 0; w < words_; ++w)
        next.cent[w] = fr.cent[w] & centralizers_[words_ * x + w];
      if (mask_popcount(next.cent) % d != 0) continue;

      stack.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

std::optional<Subgroup> find_abelian_subgroup_of_order(const FiniteGroup& g, int d) {
  return AbelianSubgroupSearch(g).find(d);
}

}  // namespace gclt
