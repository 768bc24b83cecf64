#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catbij/classical.hpp"
#include "catbij/codec.hpp"
#include "catbij/verify.hpp"

using namespace catbij;

namespace {

const BinaryTree kLeaf{};

PlanarTree leaves(int k) { return PlanarTree{std::vector<PlanarTree>(static_cast<std::size_t>(k))}; }

}  // namespace

TEST_CASE("tilings to binary trees") {
  CHECK(tiling_to_binary(StaircaseTiling{}) == kLeaf);
  CHECK(tiling_to_binary(StaircaseTiling(1, {{1, 1, 1, 1}})) == BinaryTree::node(kLeaf, kLeaf));
  const auto two_rows = StaircaseTiling(2, {{1, 1, 1, 2}, {2, 1, 2, 1}});
  CHECK(tiling_to_binary(two_rows) == BinaryTree::node(kLeaf, BinaryTree::node(kLeaf, kLeaf)));
  const auto two_cols = StaircaseTiling(2, {{1, 1, 2, 1}, {1, 2, 1, 2}});
  CHECK(tiling_to_binary(two_cols) == BinaryTree::node(BinaryTree::node(kLeaf, kLeaf), kLeaf));
  CHECK(binary_to_tiling(BinaryTree::node(BinaryTree::node(kLeaf, kLeaf), kLeaf)) == two_cols);
  CHECK_THROWS_AS(tiling_to_binary(StaircaseTiling(2, {{1, 1, 1, 2}})), InvalidShape);
}

TEST_CASE("arc trees to planar trees") {
  CHECK(arcs_to_planar(ArcTree{}) == PlanarTree{});
  CHECK(arcs_to_planar(ArcTree({3, 3, 3})) == leaves(3));
  CHECK(arcs_to_planar(ArcTree({2, 2, 3})) == PlanarTree{{leaves(2)}});
  CHECK(planar_to_arcs(PlanarTree{{leaves(2)}}) == ArcTree({2, 2, 3}));
  CHECK(planar_to_arcs(leaves(3)) == ArcTree({3, 3, 3}));
  CHECK_THROWS_AS(arcs_to_planar(ArcTree({2, 3, 3})), InvalidShape);
}

TEST_CASE("induced correspondence") {
  const auto p = std::get<PlanarTree>(induced(Family::Binary, Family::Planar, BinaryTree::node(kLeaf, kLeaf)));
  CHECK(p == leaves(1));
  // Between T, S and A it is alpha; identity on a single family.
  const AnyShape arcs = ArcTree({2, 2, 3});
  CHECK(induced(Family::Arcs, Family::Arcs, arcs) == arcs);
  CHECK_THROWS(induced(Family::Tree, Family::Planar, arcs));
}

TEST_CASE("round trips on random shapes") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Term t = random_term(static_cast<int>(rng() % 40), rng);
    const auto s = eval<StaircaseTiling>(t);
    const auto b = tiling_to_binary(s);
    CHECK(b.size() == s.n());
    CHECK(binary_to_tiling(b) == s);
    const auto a = eval<ArcTree>(t);
    const auto p = arcs_to_planar(a);
    CHECK(p.size() == a.n());
    CHECK(planar_to_arcs(p) == a);
    const auto back = induced(Family::Planar, Family::Binary, induced(Family::Binary, Family::Planar, b));
    CHECK(std::get<BinaryTree>(back) == b);
  }
}
