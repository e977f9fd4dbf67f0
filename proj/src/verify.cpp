#include "gclt/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gclt/catalog.hpp"
#include "gclt/constructors.hpp"
#include "gclt/group_ops.hpp"
#include "gclt/numbers.hpp"
#include "gclt/predicates.hpp"
#include "gclt/witness.hpp"
#include "gclt/xgraph.hpp"

namespace gclt {

namespace {

constexpr const char* kExpectedX28Dot =
    "graph X_28 {\n"
    "  v0 [label=\"C28\"];\n"
    "  v1 [label=\"C2xC14\"];\n"
    "  v2 [label=\"D14\"];\n"
    "  v3 [label=\"Dic7\"];\n"
    "  v0 -- v1;\n"
    "  v0 -- v2;\n"
    "  v0 -- v3;\n"
    "  v1 -- v2;\n"
    "  v1 -- v3;\n"
    "}\n";

class Failures {
 public:
  void add(const std::string& msg) {
    ++count_;
    if (first_.empty()) first_ = msg;
  }
  bool any() const { return count_ > 0; }
  std::string describe(const std::string& ok_detail) const {
    if (!any()) return ok_detail;
    std::string out = std::to_string(count_) + " failure(s); first: " + first_;
    return out;
  }

 private:
  int count_ = 0;
  std::string first_;
};

struct Ctx {
  explicit Ctx(const SuiteOptions& o) : opts(o) {}
  SuiteOptions opts;
  std::map<int, CatalogGroups> cache;

  const CatalogGroups& cat(int n) {
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, groups_of_order(n)).first;
    return it->second;
  }

  std::vector<int> complete_orders() const {
    std::vector<int> out;
    for (const auto& [n, complete] : supported_orders())
      if (complete && n <= opts.max_order) out.push_back(n);
    return out;
  }

  std::vector<int> all_orders() const {
    std::vector<int> out;
    for (const auto& [n, complete] : supported_orders())
      if (n <= opts.max_order) out.push_back(n);
    return out;
  }
};

std::string gname(const FiniteGroup& g) {
  return g.spec().empty() ? "<anonymous order " + std::to_string(g.order()) + ">"
                          : g.spec();
}

// --- criterion 1 & 2: number-level ground truth against brute force -------

CheckResult criterion_ground_truth(Ctx& ctx, bool aclt) {
  Failures fails;
  int orders = 0;
  for (const int n : ctx.complete_orders()) {
    ++orders;
    bool all_groups_pass = true;
    std::string offender;
    for (const FiniteGroup& g : ctx.cat(n).groups) {
      const bool ok =
          aclt ? is_aclt_group(g, ctx.opts.bound).ok : is_cclt_group(g, ctx.opts.bound).ok;
      if (!ok && all_groups_pass) {
        all_groups_pass = false;
        offender = gname(g);
      }
    }
    const bool number_flag = aclt ? is_aclt_number(n) : is_cclt_number(n);
    if (number_flag != all_groups_pass)
      fails.add("order " + std::to_string(n) + ": number predicate says " +
                (number_flag ? "true" : "false") + " but catalog brute force says " +
                (all_groups_pass ? "true" : ("false (" + offender + ")")));
  }

  // Named anchor values.
  const std::vector<std::pair<long long, bool>> marks =
      aclt ? std::vector<std::pair<long long, bool>>{{12, false}, {16, true}, {20, false}, {28, true}}
           : std::vector<std::pair<long long, bool>>{{4, true}, {6, true}, {8, false}};
  for (const auto& [n, expect] : marks) {
    const bool got = aclt ? is_aclt_number(n) : is_cclt_number(n);
    if (got != expect)
      fails.add("anchor n=" + std::to_string(n) + " classified " +
                (got ? "true" : "false"));
  }

  CheckResult r;
  r.id = aclt ? 2 : 1;
  r.name = aclt ? "ACLT-number ground truth" : "CCLT-number ground truth";
  r.passed = !fails.any();
  r.detail = fails.describe(std::to_string(orders) + " complete orders checked");
  return r;
}

// --- criterion 3: closed-form subgroup counts ------------------------------

CheckResult criterion_counting(Ctx& ctx) {
  Failures fails;
  int cases = 0;

  for (int n = 1; n <= 100; ++n) {
    ++cases;
    const FiniteGroup g = cyclic(n);
    const long long subs = subgroup_count_closed_form(CyclicShape{n});
    const long long cyc = cyclic_subgroup_count_closed_form(CyclicShape{n});
    if (count_subgroups(g, ctx.opts.bound) != subs || count_cyclic_subgroups(g) != cyc)
      fails.add("C" + std::to_string(n) + " count mismatch");
  }

  for (const long long p : {2, 3, 5}) {
    for (int k = 2;; ++k) {
      long long order = 1;
      for (int i = 0; i < k; ++i) order *= p;
      if (order > 250) break;
      ++cases;
      const std::vector<int> parts{static_cast<int>(p),
                                   static_cast<int>(order / p)};
      const FiniteGroup g = abelian(parts);
      const AbelianPrimePowerShape shape{p, k};
      if (count_subgroups(g, ctx.opts.bound) != subgroup_count_closed_form(shape) ||
          count_cyclic_subgroups(g) != cyclic_subgroup_count_closed_form(shape))
        fails.add("C" + std::to_string(p) + "xC" + std::to_string(order / p) +
                  " count mismatch");
    }
  }

  // Non-cyclic non-abelian CCLT groups of order p^r*q <= 200: the group
  // C_q : C_{p^r} whose action has order exactly p.
  auto root_of_order = [](long long t, long long m) {
    for (long long r = 2; r < m; ++r)
      if (gcd_ll(r, m) == 1 && multiplicative_order(r, m) == t)
        return static_cast<int>(r);
    throw std::logic_error("no residue of the requested order");
  };
  for (const long long p : {2, 3, 5, 7}) {
    for (const long long q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41,
                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
      if (p == q || (q - 1) % p != 0) continue;
      long long pr = p;
      for (int r = 1; pr * q <= 200; ++r, pr *= p) {
        ++cases;
        const FiniteGroup g = metacyclic(static_cast<int>(q), static_cast<int>(pr),
                                         root_of_order(p, q));
        const MetacyclicPrqShape shape{p, r, q};
        if (!is_cclt_group(g, ctx.opts.bound).ok)
          fails.add(gname(g) + " unexpectedly not CCLT");
        else if (count_subgroups(g, ctx.opts.bound) !=
                     subgroup_count_closed_form(shape) ||
                 count_cyclic_subgroups(g) !=
                     cyclic_subgroup_count_closed_form(shape))
          fails.add(gname(g) + " count mismatch");
      }
    }
  }

  // Pinned example: Dic5 has 10 subgroups, 9 of them cyclic.
  const FiniteGroup dic5 = dicyclic(5);
  if (count_subgroups(dic5, ctx.opts.bound) != 10 ||
      count_cyclic_subgroups(dic5) != 2 * 2 + 5)
    fails.add("Dic5 counts differ from 10/9");

  CheckResult r;
  r.id = 3;
  r.name = "Counting formulas";
  r.passed = !fails.any();
  r.detail = fails.describe(std::to_string(cases) + " instances checked");
  return r;
}

// --- criterion 4: number of CCLT isomorphism classes -----------------------

CheckResult criterion_g_cclt(Ctx& ctx) {
  Failures fails;
  int orders = 0;
  for (const int n : ctx.complete_orders()) {
    if (factorize(n).distinct_primes() < 2) continue;
    ++orders;
    int brute = 0;
    for (const FiniteGroup& g : ctx.cat(n).groups)
      if (is_cclt_group(g, ctx.opts.bound).ok) ++brute;
    if (brute != g_cclt_count(n))
      fails.add("order " + std::to_string(n) + ": formula " +
                std::to_string(g_cclt_count(n)) + " vs brute " +
                std::to_string(brute));
  }

  auto cclt_classes = [&](int n) {
    int c = 0;
    for (const FiniteGroup& g : ctx.cat(n).groups)
      if (is_cclt_group(g, ctx.opts.bound).ok) ++c;
    return c;
  };
  if (cclt_classes(8) != 4) fails.add("order 8 CCLT class count != 4");
  if (cclt_classes(16) < 6) fails.add("order 16 CCLT class count < 6");
  if (cclt_classes(27) < 3) fails.add("order 27 CCLT class count < 3");

  CheckResult r;
  r.id = 4;
  r.name = "G_CCLT class-count formula";
  r.passed = !fails.any();
  r.detail = fails.describe(std::to_string(orders) +
                            " non-prime-power orders plus prime-power spot checks");
  return r;
}

// --- criterion 5: dihedral / dicyclic family criteria ----------------------

CheckResult criterion_families(Ctx& ctx) {
  Failures fails;
  auto power_of_two = [](int v) { return v >= 1 && (v & (v - 1)) == 0; };
  auto twice_prime = [](int v) { return v % 2 == 0 && is_prime(v / 2); };

  for (int n = 2; n <= 32; ++n) {
    const FiniteGroup d = dihedral(n);
    const bool cclt_expected = is_prime(n) || power_of_two(n);
    const bool aclt_expected = cclt_expected || twice_prime(n);
    if (is_cclt_group(d, ctx.opts.bound).ok != cclt_expected)
      fails.add("D" + std::to_string(n) + " CCLT mismatch");
    if (is_aclt_group(d, ctx.opts.bound).ok != aclt_expected)
      fails.add("D" + std::to_string(n) + " ACLT mismatch");
  }
  for (int n = 2; n <= 16; ++n) {
    const FiniteGroup dic = dicyclic(n);
    const bool cclt_expected = is_prime(n) || power_of_two(n);
    if (is_cclt_group(dic, ctx.opts.bound).ok != cclt_expected)
      fails.add("Dic" + std::to_string(n) + " CCLT mismatch");
  }

  CheckResult r;
  r.id = 5;
  r.name = "Dihedral/dicyclic criteria";
  r.passed = !fails.any();
  r.detail = fails.describe("dihedral n<=32 and dicyclic n<=16 checked");
  return r;
}

// --- criterion 6: structure and hereditary properties ----------------------

void structure_checks(Ctx& ctx, Failures& fails, int& groups_checked) {
  for (const int n : ctx.all_orders()) {
    for (const FiniteGroup& g : ctx.cat(n).groups) {
      ++groups_checked;
      const bool cclt = is_cclt_group(g, ctx.opts.bound).ok;
      const bool aclt = is_aclt_group(g, ctx.opts.bound).ok;
      const Factorization f = factorize(n);

      if (cclt && !is_metacyclic(g, ctx.opts.bound))
        fails.add(gname(g) + ": CCLT but not metacyclic");
      if (cclt && f.distinct_primes() >= 2 && !is_z_group(g))
        fails.add(gname(g) + ": non-prime-power CCLT but not a Z-group");

      if (is_z_group(g)) {
        const auto subs = all_subgroups(g, ctx.opts.bound);
        for (std::size_t i = 0; i < subs.size(); ++i)
          for (std::size_t j = i + 1; j < subs.size(); ++j)
            if (subs[i].order() == subs[j].order() &&
                !is_isomorphic(subs[i].as_group(), subs[j].as_group()))
              fails.add(gname(g) + ": Z-group with non-isomorphic same-order subgroups");
      }

      if (cclt && !is_cyclic(g) && f.distinct_primes() >= 2 &&
          !is_minimal_noncyclic(g, ctx.opts.bound))
        fails.add(gname(g) + ": non-cyclic non-p-group CCLT but not minimal non-cyclic");

      if (aclt) {
        if (!is_metabelian(g)) fails.add(gname(g) + ": ACLT but not metabelian");
        if (!is_supersolvable(g, ctx.opts.bound))
          fails.add(gname(g) + ": ACLT but not supersolvable");
        if (!is_abelian(g)) {
          if (f.distinct_primes() > 2)
            fails.add(gname(g) + ": nonabelian ACLT with more than two prime divisors");
          const long long q = f.factors.back().p;
          const Subgroup k = sylow_subgroup(g, q);
          if (!is_normal(g, k))
            fails.add(gname(g) + ": ACLT Sylow-" + std::to_string(q) + " not normal");
          const Subgroup derived = commutator_subgroup(g);
          for (const Elem c : derived.elements())
            if (!k.contains(c)) {
              fails.add(gname(g) + ": commutator subgroup not inside Sylow-q");
              break;
            }
          // Centralizer shape needs two distinct primes p < q.
          if (f.distinct_primes() == 2) {
            const long long p = f.factors.front().p;
            const Subgroup c = centralizer(g, k);
            if (!is_abelian(c.as_group()) || g.order() / c.order() != p)
              fails.add(gname(g) + ": centralizer of Sylow-q is not the index-p abelian subgroup");
          }
        }
      }
    }
  }
}

void hereditary_checks(Ctx& ctx, Failures& fails, int& groups_checked) {
  for (const int n : ctx.all_orders()) {
    for (const FiniteGroup& g : ctx.cat(n).groups) {
      ++groups_checked;
      const bool cclt = is_cclt_group(g, ctx.opts.bound).ok;
      const bool aclt = is_aclt_group(g, ctx.opts.bound).ok;
      if (!cclt && !aclt) continue;
      const auto subs = all_subgroups(g, ctx.opts.bound);
      for (const Subgroup& h : subs) {
        const FiniteGroup sub = h.as_group();
        if (cclt && !is_cclt_group(sub, ctx.opts.bound).ok)
          fails.add(gname(g) + ": subgroup of order " + std::to_string(h.order()) +
                    " is not CCLT");
        if (aclt && !is_aclt_group(sub, ctx.opts.bound).ok)
          fails.add(gname(g) + ": subgroup of order " + std::to_string(h.order()) +
                    " is not ACLT");
      }
      if (cclt) {
        for (const Subgroup& h : subs) {
          if (!is_normal(g, h)) continue;
          if (!is_cclt_group(quotient(g, h), ctx.opts.bound).ok)
            fails.add(gname(g) + ": quotient by order-" + std::to_string(h.order()) +
                      " normal subgroup is not CCLT");
        }
      }
    }
  }
}

CheckResult criterion_structure(Ctx& ctx) {
  Failures fails;
  int checked = 0;
  structure_checks(ctx, fails, checked);
  int checked2 = 0;
  hereditary_checks(ctx, fails, checked2);
  CheckResult r;
  r.id = 6;
  r.name = "Structure suite";
  r.passed = !fails.any();
  r.detail = fails.describe(std::to_string(checked) + " catalog groups checked");
  return r;
}

// --- criterion 7: product characterizations vs brute force -----------------

CheckResult criterion_products(Ctx& ctx) {
  Failures fails;
  int pairs = 0;
  const auto orders = ctx.all_orders();
  for (std::size_t a = 0; a < orders.size(); ++a) {
    for (std::size_t b = a; b < orders.size(); ++b) {
      const long long prod = static_cast<long long>(orders[a]) * orders[b];
      if (prod > ctx.opts.bound) continue;
      const auto& ga = ctx.cat(orders[a]).groups;
      const auto& gb = ctx.cat(orders[b]).groups;
      for (std::size_t i = 0; i < ga.size(); ++i) {
        for (std::size_t j = (a == b ? i : 0); j < gb.size(); ++j) {
          ++pairs;
          const FiniteGroup& h = ga[i];
          const FiniteGroup& k = gb[j];
          const FiniteGroup p = direct_product(h, k);
          const bool cclt_exp = product_cclt_expected(h, k);
          const bool cclt_brute = is_cclt_group(p, ctx.opts.bound).ok;
          if (cclt_exp != cclt_brute)
            fails.add("CCLT mismatch for " + gname(h) + " x " + gname(k));
          const bool aclt_exp = product_aclt_expected(h, k);
          const bool aclt_brute = is_aclt_group(p, ctx.opts.bound).ok;
          if (aclt_exp != aclt_brute)
            fails.add("ACLT mismatch for " + gname(h) + " x " + gname(k));
          if (product_cclt_expected(k, h) != cclt_exp ||
              product_aclt_expected(k, h) != aclt_exp)
            fails.add("asymmetric product rule for " + gname(h) + " x " + gname(k));
        }
      }
    }
  }
  CheckResult r;
  r.id = 7;
  r.name = "Product theorems";
  r.passed = !fails.any();
  r.detail = fails.describe(std::to_string(pairs) + " catalog pairs checked");
  return r;
}

// --- criterion 8: witness postconditions ------------------------------------

void witness_checks(Ctx& ctx, bool aclt, Failures& fails, int& count) {
  for (long long n = 2; n <= ctx.opts.max_order; ++n) {
    if (aclt ? is_aclt_number(n) : is_cclt_number(n)) continue;
    ++count;
    try {
      const Witness w =
          aclt ? non_aclt_witness(n, ctx.opts.bound) : non_cclt_witness(n, ctx.opts.bound);
      if (!w.verified) {
        fails.add("witness for n=" + std::to_string(n) + " not verified");
        continue;
      }
      const bool group_flag = aclt ? is_aclt_group(w.group, ctx.opts.bound).ok
                                   : is_cclt_group(w.group, ctx.opts.bound).ok;
      if (group_flag)
        fails.add("witness group for n=" + std::to_string(n) +
                  " unexpectedly satisfies the property");
    } catch (const std::exception& e) {
      fails.add("witness for n=" + std::to_string(n) + " failed: " + e.what());
    }
  }
}

CheckResult criterion_witnesses(Ctx& ctx) {
  Failures fails;
  int count = 0;
  witness_checks(ctx, false, fails, count);
  witness_checks(ctx, true, fails, count);
  if (ctx.opts.slow) {
    ++count;
    try {
      const Witness w = non_aclt_witness(243, ctx.opts.bound);
      if (!w.verified) fails.add("order-243 witness not verified");
    } catch (const std::exception& e) {
      fails.add(std::string("order-243 witness failed: ") + e.what());
    }
  }
  CheckResult r;
  r.id = 8;
  r.name = "Witness postconditions";
  r.passed = !fails.any();
  r.detail = fails.describe(std::to_string(count) + " witnesses verified" +
                            (ctx.opts.slow ? " (including order 243)" : ""));
  return r;
}

// --- criterion 9: Figure-style golden DOT for X_28 -------------------------

CheckResult criterion_x28(Ctx&) {
  CheckResult r;
  r.id = 9;
  r.name = "X_28 reproduction";
  const std::string dot = to_dot(build_xgraph(28));
  r.passed = dot == kExpectedX28Dot;
  r.detail = r.passed ? "DOT output is byte-identical"
                      : "DOT output differs from the pinned rendering";
  return r;
}

// --- criterion 10: completeness/connectivity claims -------------------------

CheckResult criterion_xgraph_claims(Ctx& ctx) {
  Failures fails;
  int orders = 0;
  for (const int n : ctx.complete_orders()) {
    ++orders;
    const XGraph x = build_xgraph(n);
    const bool complete_expected = is_abelian_number(n) || is_cclt_number(n);
    if (is_complete(x) != complete_expected)
      fails.add("X_" + std::to_string(n) + " completeness mismatch");
    if (is_connected(x) != is_aclt_number(n))
      fails.add("X_" + std::to_string(n) + " connectivity mismatch");

    if (static_cast<long long>(n) * n <= ctx.opts.bound) {
      const auto& gs = ctx.cat(n).groups;
      std::vector<std::pair<int, int>> brute_edges;
      for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
          if (brute_edge_check(gs[i], gs[j], ctx.opts.bound))
            brute_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      if (brute_edges != x.edges)
        fails.add("X_" + std::to_string(n) + " edges differ from brute force");
    }
  }
  CheckResult r;
  r.id = 10;
  r.name = "X_n completeness/connectivity claims";
  r.passed = !fails.any();
  r.detail = fails.describe(std::to_string(orders) + " complete orders checked");
  return r;
}

// --- criterion 11: number-level containments --------------------------------

CheckResult criterion_containments(Ctx&) {
  Failures fails;
  for (long long n = 1; n <= 500; ++n) {
    if (is_cyclic_number(n) && !is_cclt_number(n))
      fails.add("n=" + std::to_string(n) + ": cyclic but not CCLT");
    if (is_cclt_number(n) && !is_aclt_number(n))
      fails.add("n=" + std::to_string(n) + ": CCLT but not ACLT");
    if (is_abelian_number(n) && !is_aclt_number(n))
      fails.add("n=" + std::to_string(n) + ": abelian but not ACLT");
  }
  CheckResult r;
  r.id = 11;
  r.name = "Containments for n <= 500";
  r.passed = !fails.any();
  r.detail = fails.describe("500 values checked");
  return r;
}

// --- criterion 12: abelian subgroups of order p^3 in order-p^4 groups -------

CheckResult criterion_p4(Ctx& ctx) {
  Failures fails;
  for (const FiniteGroup& g : ctx.cat(16).groups)
    if (!find_abelian_subgroup_of_order(g, 8))
      fails.add(gname(g) + " lacks an abelian subgroup of order 8");
  CheckResult r;
  r.id = 12;
  r.name = "Order-16 abelian subgroups of order 8";
  r.passed = !fails.any();
  r.detail = fails.describe(std::to_string(ctx.cat(16).groups.size()) +
                            " groups of order 16 checked");
  return r;
}

using Criterion = CheckResult (*)(Ctx&);

CheckResult criterion_cclt_truth(Ctx& ctx) { return criterion_ground_truth(ctx, false); }
CheckResult criterion_aclt_truth(Ctx& ctx) { return criterion_ground_truth(ctx, true); }

const std::vector<Criterion>& all_criteria() {
  static const std::vector<Criterion> cs = {
      criterion_cclt_truth, criterion_aclt_truth, criterion_counting,
      criterion_g_cclt,     criterion_families,   criterion_structure,
      criterion_products,   criterion_witnesses,  criterion_x28,
      criterion_xgraph_claims, criterion_containments, criterion_p4};
  return cs;
}

const std::map<std::string, std::vector<int>>& suite_map() {
  // Criterion ids per suite; "all" runs everything.
  static const std::map<std::string, std::vector<int>> m = {
      {"cclt-numbers", {1, 4, 8}},
      {"aclt-numbers", {2, 8, 11}},
      {"subgroup-counts", {3}},
      {"hereditary", {6}},
      {"structure", {5, 6, 12}},
      {"products", {7}},
      {"xgraph-claims", {9, 10}},
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}},
  };
  return m;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, ids] : suite_map()) out.push_back(name);
  return out;
}

bool is_suite_name(const std::string& name) { return suite_map().count(name) > 0; }

std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteOptions& opts) {
  const auto it = suite_map().find(suite);
  if (it == suite_map().end())
    throw std::invalid_argument("unknown suite: " + suite);
  Ctx ctx(opts);
  std::vector<CheckResult> out;
  for (const int id : it->second) out.push_back(all_criteria()[id - 1](ctx));
  return out;
}

std::vector<CheckResult> run_acceptance(const SuiteOptions& opts) {
  return run_suite("all", opts);
}

}  // namespace gclt
