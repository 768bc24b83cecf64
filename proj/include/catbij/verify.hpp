#pragma once

// Independent oracles and the exhaustive property suite.
//
// The brute-force generators below are written against the family
// definitions alone (validate), never against the constructors, so that
// comparing them with evaluated terms is a real cross-check.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "catbij/model.hpp"
#include "catbij/terms.hpp"

namespace catbij {

inline constexpr int kMaxCatalanIndex = 35;

// Segner's recursion, checked 64-bit. Throws std::overflow_error for n > 35
// and std::invalid_argument for n < 0.
std::uint64_t catalan(int n);
// binom(2n, n) / (n + 1) in 128-bit arithmetic; same domain as catalan().
std::uint64_t catalan_closed_form(int n);

// Every valid shape of size n, by exhaustive generation and filtering.
std::set<RightSweptTree> brute_force_trees(int n);
std::set<StaircaseTiling> brute_force_tilings(int n);
std::set<ArcTree> brute_force_arcs(int n);

// All tilings of the size-n staircase by exactly `count` axis-aligned
// rectangles, with no diagonal requirement.
std::set<StaircaseTiling> rectangulations(int n, int count);

// A uniformly random term of size n (n <= 12 recommended: draws from
// enum_terms).
Term random_enumerated_term(int n, std::mt19937_64& rng);
// A random valid term of size n built top-down; works for any n.
Term random_term(int n, std::mt19937_64& rng);

struct CheckResult {
  std::string name;
  int n = 0;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  int max_n = 12;
  int oracle_n = 8;
  int jobs = 1;
  std::uint64_t seed = 20130712;
};

// Runs every check up to the given bounds (class counts reach size
// max_n + 1); result order does not depend on `jobs`.
std::vector<CheckResult> run_suite(const SuiteOptions& options);

// `CHECK <name> n=<n> PASS|FAIL <detail>` lines.
std::string format_check_lines(const std::vector<CheckResult>& results);
// Aligned human-readable table.
std::string format_report_table(const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace catbij
