#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "catbij/codec.hpp"
#include "catbij/verify.hpp"

using namespace catbij;

namespace {

bool has(const std::vector<CheckResult>& results, const std::string& name, int n) {
  return std::any_of(results.begin(), results.end(),
                     [&](const CheckResult& r) { return r.name == name && r.n == n && r.pass; });
}

}  // namespace

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(12) == 208012);
  CHECK(catalan(35) == 3116285494907301262ULL);
  for (int n = 0; n <= kMaxCatalanIndex; ++n) CHECK(catalan(n) == catalan_closed_form(n));
  CHECK_THROWS_AS(catalan(36), std::overflow_error);
  CHECK_THROWS_AS(catalan_closed_form(36), std::overflow_error);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("brute-force families") {
  CHECK(brute_force_tilings(3).size() == 5);
  CHECK(brute_force_arcs(4).size() == 14);
  const auto two = brute_force_trees(2);
  REQUIRE(two.size() == 2);
  CHECK(two.count(parse_tree("M(*)")) == 1);
  CHECK(two.count(parse_tree("R(*)")) == 1);
  CHECK(brute_force_trees(0).size() == 1);
  CHECK(brute_force_tilings(0).size() == 1);
  CHECK(brute_force_arcs(0).size() == 1);
}

TEST_CASE("rectangulations") {
  // With more rectangles than diagonal cells the tilings are no longer
  // diagonal, and there are more of them.
  CHECK(rectangulations(3, 3).size() == 5);
  CHECK(rectangulations(2, 3).size() == 1);
  CHECK(rectangulations(3, 2).empty());
  CHECK(rectangulations(3, 4).size() > 5);
}

TEST_CASE("random terms have the requested size") {
  std::mt19937_64 rng(1);
  for (int n = 0; n <= 60; ++n) CHECK(random_term(n, rng).size() == n);
  for (int n = 0; n <= 8; ++n) CHECK(random_enumerated_term(n, rng).size() == n);
}

TEST_CASE("small suites") {
  SuiteOptions three;
  three.max_n = 3;
  three.oracle_n = 3;
  const auto r3 = run_suite(three);
  CHECK(all_passed(r3));
  CHECK(has(r3, "alpha_vs_beta", 3));
  const auto lines = format_check_lines(r3);
  CHECK(lines.find("CHECK alpha_vs_beta n=3 PASS 3 equal, 2 swapped\n") != std::string::npos);

  SuiteOptions two;
  two.max_n = 2;
  two.oracle_n = 2;
  const auto r2 = run_suite(two);
  CHECK(all_passed(r2));
  CHECK(has(r2, "alpha_equals_beta", 2));

  SuiteOptions six;
  six.max_n = 6;
  six.oracle_n = 6;
  const auto r6 = run_suite(six);
  CHECK(all_passed(r6));
  CHECK(has(r6, "diagonal_equivalence", 6));
  six.jobs = 3;
  CHECK(format_check_lines(run_suite(six)) == format_check_lines(r6));
  CHECK(format_report_table(r6).find(std::to_string(r6.size()) + "/" + std::to_string(r6.size()) +
                                     " checks passed") != std::string::npos);
}

TEST_CASE("report formatting") {
  const std::vector<CheckResult> results{{"demo", 2, true, "fine"}, {"demo", 3, false, "broken"}};
  CHECK(format_check_lines(results) == "CHECK demo n=2 PASS fine\nCHECK demo n=3 FAIL broken\n");
  CHECK_FALSE(all_passed(results));
  CHECK(format_report_table(results).find("1/2 checks passed") != std::string::npos);
}
