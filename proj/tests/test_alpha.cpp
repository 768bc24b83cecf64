#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catbij/alpha.hpp"
#include "catbij/codec.hpp"
#include "catbij/verify.hpp"

using namespace catbij;

TEST_CASE("size-one shapes correspond") {
  const StaircaseTiling square(1, {{1, 1, 1, 1}});
  CHECK(alpha<RightSweptTree>(square) == RightSweptTree::leaf());
  CHECK(alpha<ArcTree>(square) == ArcTree({1}));
  CHECK(alpha<StaircaseTiling>(ArcTree({1})) == square);
}

TEST_CASE("a middle chain maps to stacked rows") {
  const auto chain = parse_tree("M(M(*))");
  CHECK(format(alpha<StaircaseTiling>(chain)) == "S3[1,1,1,3;2,1,2,2;3,1,3,1]");
  CHECK(alpha<ArcTree>(chain) == ArcTree({3, 3, 3}));
}

TEST_CASE("the dynamic overload agrees with the template") {
  const auto arcs = ArcTree({2, 2, 3});
  CHECK(std::get<RightSweptTree>(alpha(Family::Tree, arcs)) == alpha<RightSweptTree>(arcs));
  CHECK(std::get<ArcTree>(alpha(Family::Arcs, arcs)) == arcs);
  CHECK_THROWS(alpha(Family::Binary, arcs));
  CHECK_THROWS(alpha(Family::Tree, AnyShape{BinaryTree{}}));
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(alpha<StaircaseTiling>(ArcTree({3, 1, 3})), InvalidShape);
  CHECK_THROWS_AS(alpha<ArcTree>(RightSweptTree::left(RightSweptTree::leaf())), InvalidShape);
}

TEST_CASE("identity, inverse and composition on random large shapes") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const int n = 13 + static_cast<int>(rng() % 28);
    const Term t = random_term(n, rng);
    const auto s = eval<StaircaseTiling>(t);
    const auto tree = alpha<RightSweptTree>(s);
    const auto arcs = alpha<ArcTree>(tree);
    CHECK(alpha<StaircaseTiling>(s) == s);
    CHECK(alpha<StaircaseTiling>(tree) == s);
    CHECK(alpha<StaircaseTiling>(arcs) == s);
    CHECK(alpha<ArcTree>(s) == arcs);
    CHECK(tree.size() == n);
    CHECK(arcs.n() == n);
  }
}
