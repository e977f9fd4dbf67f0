#pragma once

#include <string>
#include <vector>

namespace gclt {

struct CheckResult {
  int id = 0;            // acceptance criterion number
  std::string name;
  bool passed = false;
  std::string detail;    // counts checked, or the first failure
};

struct SuiteOptions {
  int max_order = 63;    // largest catalog order the suites scan
  bool slow = false;     // unlocks the order-243 odd-prime witness check
  int bound = 400;       // enumeration bound for brute-force subgroup work
};

// Suites: cclt-numbers, aclt-numbers, subgroup-counts, hereditary,
// structure, products, xgraph-claims, all.
std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteOptions& opts);

// The twelve acceptance criteria, in order.
std::vector<CheckResult> run_acceptance(const SuiteOptions& opts);

}  // namespace gclt
