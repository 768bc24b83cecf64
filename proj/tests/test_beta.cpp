#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "catbij/alpha.hpp"
#include "catbij/beta.hpp"
#include "catbij/codec.hpp"
#include "catbij/verify.hpp"

using namespace catbij;

namespace {

StaircaseTiling tiling(int n, std::vector<Rect> rects) { return StaircaseTiling(n, std::move(rects)); }

}  // namespace

TEST_CASE("small images") {
  CHECK(beta(RightSweptTree{}) == StaircaseTiling{});
  CHECK(beta(RightSweptTree::leaf()) == tiling(1, {{1, 1, 1, 1}}));

  const auto right_chain = parse_tree("R(R(*))");
  const auto right_image = tiling(3, {{1, 1, 3, 1}, {1, 2, 2, 2}, {1, 3, 1, 3}});
  CHECK(beta(right_chain) == right_image);
  CHECK(beta_inv(right_image) == right_chain);

  const auto left_then_right = parse_tree("L(R(*))");
  const auto lr_image = tiling(3, {{1, 1, 2, 2}, {1, 3, 1, 3}, {3, 1, 3, 1}});
  CHECK(beta(left_then_right) == lr_image);
  CHECK(beta_inv(lr_image) == left_then_right);

  const auto fork = parse_tree("B(R(*),*)");
  const auto fork_image = tiling(4, {{1, 1, 3, 2}, {1, 3, 1, 4}, {2, 3, 2, 3}, {4, 1, 4, 1}});
  CHECK(beta(fork) == fork_image);
  CHECK(beta_inv(fork_image) == fork);

  const auto mid_chain = parse_tree("M(M(*))");
  const auto mid_image = tiling(3, {{1, 1, 1, 3}, {2, 1, 2, 2}, {3, 1, 3, 1}});
  CHECK(beta(mid_chain) == mid_image);
  CHECK(beta_inv(mid_image) == mid_chain);
}

TEST_CASE("rule report") {
  for (const char* text : {"M(M(*))", "R(R(*))", "L(R(*))", "B(R(*),*)", "R(L(R(*)))", "B(L(R(*)),M(R(*)))"}) {
    const auto t = parse_tree(text);
    CAPTURE(text);
    CHECK(check_beta_rules(t, beta(t)).empty());
  }
  // A tiling that is not the image reports a correspondence failure.
  const auto t = parse_tree("M(M(*))");
  const auto report = check_beta_rules(t, beta(parse_tree("R(R(*))")));
  REQUIRE_FALSE(report.empty());
  CHECK(report.front().rule == BetaRule::Correspondence);
}

TEST_CASE("correspondence lists every node once") {
  const auto t = parse_tree("B(L(R(*)),M(R(*)))");
  const auto nodes = beta_correspondence(t);
  CHECK(nodes.size() == static_cast<std::size_t>(t.size()));
  std::set<std::string> paths;
  for (const auto& nr : nodes) paths.insert(nr.path);
  CHECK(paths.size() == nodes.size());
  CHECK(paths.count("") == 1);
  CHECK(paths.count("LLR") == 1);
  const auto image = beta(t);
  for (const auto& nr : nodes) {
    CAPTURE(nr.path);
    CHECK(image.find(nr.rect.r2, nr.rect.c2) != nullptr);
    CHECK(*image.find(nr.rect.r2, nr.rect.c2) == nr.rect);
  }
}

TEST_CASE("adjacency predicates") {
  const Rect a{1, 1, 2, 2};
  CHECK(immediately_right_of({1, 3, 1, 3}, a));
  CHECK_FALSE(immediately_right_of({2, 3, 2, 3}, a));  // top rows differ
  CHECK_FALSE(immediately_right_of({1, 4, 1, 4}, a));
  CHECK(immediately_below({3, 1, 3, 1}, a));
  CHECK(immediately_below({3, 2, 3, 2}, a));
  CHECK_FALSE(immediately_below({3, 3, 3, 3}, a));
  CHECK_FALSE(immediately_below({4, 1, 4, 1}, a));
}

TEST_CASE("beta agrees with alpha up to size 2 but not at size 3") {
  for (int n = 0; n <= 2; ++n)
    for (const auto& t : brute_force_trees(n)) CHECK(beta(t) == alpha<StaircaseTiling>(t));
  int differ = 0;
  for (const auto& t : brute_force_trees(3))
    if (beta(t) != alpha<StaircaseTiling>(t)) ++differ;
  CHECK(differ == 2);
}

TEST_CASE("mutual inverses on random large trees") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto t = eval<RightSweptTree>(random_term(10 + static_cast<int>(rng() % 40), rng));
    const auto s = beta(t);
    REQUIRE(is_valid(s));
    CHECK(beta_inv(s) == t);
    CHECK(check_beta_rules(t, s).empty());
  }
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(beta(RightSweptTree::left(RightSweptTree::leaf())), InvalidShape);
  CHECK_THROWS_AS(beta_inv(tiling(2, {{1, 1, 1, 2}})), InvalidShape);
}
