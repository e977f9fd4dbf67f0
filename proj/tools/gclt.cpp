// Command-line front end: order classification, group inspection, witness
// construction, X_n export, and the theorem-verification suites.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gclt/catalog.hpp"
#include "gclt/group_ops.hpp"
#include "gclt/group_spec.hpp"
#include "gclt/numbers.hpp"
#include "gclt/predicates.hpp"
#include "gclt/verify.hpp"
#include "gclt/witness.hpp"
#include "gclt/xgraph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// GCLT_MAX_ORDER raises the enumeration bound; overrides below the default
// do not take effect.
int enumeration_bound() {
  int bound = gclt::kDefaultEnumerationBound;
  if (const char* env = std::getenv("GCLT_MAX_ORDER")) {
    const int v = std::atoi(env);
    if (v > bound) bound = v;
  }
  return bound;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(long long n) {
  print_json(gclt::classify(n).to_json());
  return kExitOk;
}

int cmd_range(const std::string& range, bool csv) {
  const auto sep = range.find("..");
  if (sep == std::string::npos)
    throw CLI::ValidationError("range", "expected <a>..<b>");
  const long long a = std::stoll(range.substr(0, sep));
  const long long b = std::stoll(range.substr(sep + 2));
  if (a < 1 || b < a) throw CLI::ValidationError("range", "expected 1 <= a <= b");
  if (csv) {
    std::cout << gclt::NumberClass::csv_header() << "\n";
    for (long long n = a; n <= b; ++n)
      std::cout << gclt::classify(n).csv_row() << "\n";
  } else {
    nlohmann::json out = nlohmann::json::array();
    for (long long n = a; n <= b; ++n) out.push_back(gclt::classify(n).to_json());
    print_json(out);
  }
  return kExitOk;
}

int cmd_group(const std::string& spec, bool predicates, bool subgroups) {
  const gclt::FiniteGroup g = gclt::build_spec(spec);
  nlohmann::json out = g.to_json();
  const int bound = enumeration_bound();
  if (predicates) {
    out["predicates"] = nlohmann::json{
        {"abelian", gclt::is_abelian(g)},
        {"cyclic", gclt::is_cyclic(g)},
        {"metacyclic", gclt::is_metacyclic(g, bound)},
        {"z_group", gclt::is_z_group(g)},
        {"a_group", gclt::is_a_group(g)},
        {"metabelian", gclt::is_metabelian(g)},
        {"supersolvable", gclt::is_supersolvable(g, bound)},
        {"nilpotent", gclt::is_nilpotent(g)},
        {"minimal_noncyclic", gclt::is_minimal_noncyclic(g, bound)},
        {"minimal_nonabelian", gclt::is_minimal_nonabelian(g, bound)},
    };
    out["reports"] = nlohmann::json{
        {"clt", gclt::is_clt_group(g, bound).to_json()},
        {"cclt", gclt::is_cclt_group(g, bound).to_json()},
        {"aclt", gclt::is_aclt_group(g, bound).to_json()},
    };
  }
  if (subgroups) {
    nlohmann::json subs = nlohmann::json::array();
    for (const gclt::Subgroup& h : gclt::all_subgroups(g, bound))
      subs.push_back(h.elements());
    out["subgroups"] = std::move(subs);
  }
  print_json(out);
  return kExitOk;
}

int cmd_witness(long long n, const std::string& kind, bool verify_flag) {
  const int bound = enumeration_bound();
  gclt::Witness w = kind == "cclt" ? gclt::non_cclt_witness(n, bound)
                                   : gclt::non_aclt_witness(n, bound);
  nlohmann::json out = w.to_json();
  if (verify_flag && !w.verified) {
    // Construction above the bound skips the brute-force check; an explicit
    // --verify insists on it.
    throw std::invalid_argument(
        "witness for n=" + std::to_string(n) +
        " exceeds the enumeration bound; raise GCLT_MAX_ORDER to verify");
  }
  print_json(out);
  return kExitOk;
}

int cmd_catalog(int n, bool all) {
  if (all) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [order, complete] : gclt::supported_orders())
      out.push_back(gclt::catalog_entry(order).to_json());
    print_json(out);
  } else {
    print_json(gclt::catalog_entry(n).to_json());
  }
  return kExitOk;
}

int cmd_xgraph(int n, const std::string& dot_file, const std::string& json_file) {
  const gclt::XGraph x = gclt::build_xgraph(n);
  if (!dot_file.empty()) {
    std::ofstream out(dot_file);
    if (!out) throw std::invalid_argument("cannot write " + dot_file);
    out << gclt::to_dot(x);
  }
  if (!json_file.empty()) {
    std::ofstream out(json_file);
    if (!out) throw std::invalid_argument("cannot write " + json_file);
    out << gclt::to_json(x).dump(2) << "\n";
  }
  if (dot_file.empty() && json_file.empty()) print_json(gclt::to_json(x));
  return kExitOk;
}

int cmd_verify(const std::string& suite, int max_order, bool slow) {
  gclt::SuiteOptions opts;
  opts.max_order = max_order;
  opts.slow = slow;
  opts.bound = enumeration_bound();
  bool all_passed = true;
  for (const gclt::CheckResult& r : gclt::run_suite(suite, opts)) {
    std::printf("[%s] %2d. %s — %s\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str());
    all_passed = all_passed && r.passed;
  }
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group toolkit for subgroup-existence classification"};
  app.require_subcommand(1);

  long long classify_n = 0;
  auto* classify = app.add_subcommand("classify", "Classify one order");
  classify->add_option("n", classify_n, "order to classify")->required();

  std::string range_arg;
  bool range_csv = false;
  auto* range = app.add_subcommand("range", "Classify a range of orders");
  range->add_option("range", range_arg, "range, e.g. 1..500")->required();
  range->add_flag("--csv", range_csv, "emit CSV rows");

  std::string group_spec;
  bool group_predicates = false, group_subgroups = false;
  auto* group = app.add_subcommand("group", "Build and inspect a group");
  group->add_option("spec", group_spec, "constructor expression, e.g. M(7,3,2)")
      ->required();
  group->add_flag("--predicates", group_predicates, "include predicate flags");
  group->add_flag("--subgroups", group_subgroups, "include the subgroup lattice");

  long long witness_n = 0;
  std::string witness_kind;
  bool witness_verify = false;
  auto* witness = app.add_subcommand("witness", "Construct a counterexample group");
  witness->add_option("n", witness_n, "order")->required();
  witness->add_option("--kind", witness_kind, "cclt or aclt")
      ->required()
      ->check(CLI::IsMember({"cclt", "aclt"}));
  witness->add_flag("--verify", witness_verify, "insist on brute-force verification");

  int catalog_n = 0;
  auto* catalog = app.add_subcommand("catalog", "List catalogued groups of an order");
  auto* catalog_opt = catalog->add_option("n", catalog_n, "order (omit for all)");

  int xgraph_n = 0;
  std::string xgraph_dot, xgraph_json;
  auto* xgraph = app.add_subcommand("xgraph", "Build the graph X_n");
  xgraph->add_option("n", xgraph_n, "order")->required();
  xgraph->add_option("--dot", xgraph_dot, "write DOT to a file");
  xgraph->add_option("--json", xgraph_json, "write JSON to a file");

  std::string verify_suite;
  int verify_max_order = 63;
  bool verify_slow = false;
  auto* verify = app.add_subcommand("verify", "Run a theorem-verification suite");
  verify->add_option("suite", verify_suite, "one of: cclt-numbers, aclt-numbers, "
                     "subgroup-counts, hereditary, structure, products, "
                     "xgraph-claims, all")
      ->required();
  verify->add_option("--max-order", verify_max_order,
                     "largest catalog order scanned (default 63)");
  verify->add_flag("--slow", verify_slow, "include the order-243 witness check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(classify_n);
    if (*range) return cmd_range(range_arg, range_csv);
    if (*group) return cmd_group(group_spec, group_predicates, group_subgroups);
    if (*witness) return cmd_witness(witness_n, witness_kind, witness_verify);
    if (*catalog) return cmd_catalog(catalog_n, catalog_opt->count() == 0);
    if (*xgraph) return cmd_xgraph(xgraph_n, xgraph_dot, xgraph_json);
    if (*verify) {
      if (!gclt::is_suite_name(verify_suite))
        throw std::invalid_argument("unknown suite: " + verify_suite);
      return cmd_verify(verify_suite, verify_max_order, verify_slow);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
