#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "catbij/codec.hpp"
#include "catbij/terms.hpp"
#include "catbij/verify.hpp"

using namespace catbij;

namespace {

const RightSweptTree kLeaf = RightSweptTree::leaf();
const StaircaseTiling kUnitSquare(1, {{1, 1, 1, 1}});

std::string term_text(const std::string& literal) { return format(parse_term(literal)); }

}  // namespace

TEST_CASE("term domains") {
  const Term e;
  const Term one = Term::m(e);
  CHECK(e.size() == 0);
  CHECK(one.size() == 1);
  CHECK_THROWS_AS(Term::r(e), DomainError);
  CHECK_THROWS_AS(Term::l(e), DomainError);
  CHECK_THROWS_AS(Term::l(one), DomainError);
  CHECK_THROWS_AS(Term::l(Term::m(Term::r(one))), DomainError);
  CHECK_NOTHROW(Term::l(Term::r(one)));
  // Fork: t1 of size >= 2 and not an m-term, t2 of size >= 1.
  CHECK_THROWS_AS(Term::f(Term::r(one), e), DomainError);
  CHECK_THROWS_AS(Term::f(one, one), DomainError);
  CHECK_THROWS_AS(Term::f(Term::m(one), one), DomainError);
  const Term fork = Term::f(Term::r(one), one);
  CHECK(fork.size() == 4);
  CHECK(fork.kind() == TermKind::F);
  CHECK(fork.first() == Term::r(one));
  CHECK(fork.second() == one);
}

TEST_CASE("step on tilings") {
  CHECK(step(Op::M, StaircaseTiling{}) == kUnitSquare);
  CHECK(format(step(Op::M, kUnitSquare)) == "S2[1,1,1,2;2,1,2,1]");
  CHECK(format(step(Op::R, kUnitSquare)) == "S2[1,2,1,2;1,1,2,1]");
  const auto r1 = step(Op::R, kUnitSquare);
  CHECK(format(step(Op::F, r1, kUnitSquare)) == "S4[1,4,1,4;1,1,2,3;3,2,3,2;3,1,4,1]");
  CHECK(format(step(Op::L, r1)) == "S3[1,1,1,3;2,2,2,2;2,1,3,1]");
  CHECK_THROWS_AS(step(Op::R, StaircaseTiling{}), DomainError);
  CHECK_THROWS_AS(step(Op::L, kUnitSquare), DomainError);
  CHECK_THROWS_AS(step(Op::F, r1, StaircaseTiling{}), DomainError);
  CHECK_THROWS_AS(step(Op::F, r1), DomainError);
}

TEST_CASE("step on arc trees") {
  CHECK(step(Op::M, ArcTree{}) == ArcTree({1}));
  CHECK(step(Op::L, ArcTree({1, 2})) == ArcTree({2, 2, 3}));
  CHECK(step(Op::R, ArcTree({1})) == ArcTree({1, 2}));
  CHECK(step(Op::M, ArcTree({1})) == ArcTree({2, 2}));
}

TEST_CASE("step on trees") {
  CHECK(step(Op::M, RightSweptTree{}) == kLeaf);
  CHECK(step(Op::R, kLeaf) == RightSweptTree::right(kLeaf));
  const auto rl = RightSweptTree::right(kLeaf);
  CHECK(step(Op::L, rl) == RightSweptTree::left(rl));
  CHECK(step(Op::F, rl, kLeaf) == RightSweptTree::left_right(rl, kLeaf));
  CHECK_THROWS_AS(step(Op::L, RightSweptTree::mid(kLeaf)), DomainError);
}

TEST_CASE("decompose reads off the outermost constructor") {
  const auto s = decompose(StaircaseTiling(2, {{1, 1, 1, 2}, {2, 1, 2, 1}}));
  CHECK(s.op == Op::M);
  CHECK(s.first == kUnitSquare);

  const auto a = decompose(ArcTree({3, 2, 3}));
  CHECK(a.op == Op::M);
  CHECK(a.first == ArcTree({1, 2}));

  const auto rl = RightSweptTree::right(kLeaf);
  const auto t = decompose(RightSweptTree::left_right(rl, kLeaf));
  CHECK(t.op == Op::F);
  CHECK(t.first == rl);
  CHECK(t.second == kLeaf);

  CHECK_THROWS_AS(decompose(StaircaseTiling{}), DomainError);
  CHECK_THROWS_AS(decompose(ArcTree({3, 1, 3})), InvalidShape);
}

TEST_CASE("term_of and eval") {
  CHECK(format(term_of(kUnitSquare)) == "m(E)");
  CHECK(format(term_of(ArcTree({2, 2, 3}))) == "l(r(m(E)))");
  CHECK(eval<RightSweptTree>(parse_term("m(m(m(E)))")) ==
        RightSweptTree::mid(RightSweptTree::mid(kLeaf)));
  CHECK(format(eval<StaircaseTiling>(parse_term("l(r(m(E)))"))) == "S3[1,1,1,3;2,2,2,2;2,1,3,1]");
  CHECK(eval<ArcTree>(Term{}).n() == 0);
  CHECK(std::get<ArcTree>(eval(Family::Arcs, parse_term("m(m(E))"))) == ArcTree({2, 2}));
  CHECK_THROWS(term_of(AnyShape{BinaryTree{}}));
}

TEST_CASE("enumeration order and counts") {
  REQUIRE(enum_terms(1).size() == 1);
  CHECK(format(enum_terms(1)[0]) == "m(E)");

  std::vector<std::string> three;
  for (const auto& t : enum_terms(3)) three.push_back(format(t));
  CHECK(three == std::vector<std::string>{"m(m(m(E)))", "m(r(m(E)))", "r(m(m(E)))", "r(r(m(E)))", "l(r(m(E)))"});

  std::vector<std::string> forks;
  for (const auto& t : enum_terms(4))
    if (t.kind() == TermKind::F) forks.push_back(format(t));
  // Written with the unrestricted argument first.
  CHECK(forks == std::vector<std::string>{"f(m(E),r(m(E)))"});

  for (int n = 0; n <= 10; ++n) {
    const auto& terms = enum_terms(n);
    CHECK(terms.size() == catalan(n));
    for (std::size_t i = 1; i < terms.size(); ++i) CHECK(terms[i - 1] < terms[i]);
  }
  CHECK_THROWS(enum_terms(-1));
}

TEST_CASE("decompose inverts step on random shapes") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Term t = random_term(1 + static_cast<int>(rng() % 30), rng);
    const auto s = eval<StaircaseTiling>(t);
    const auto a = eval<ArcTree>(t);
    const auto tree = eval<RightSweptTree>(t);
    REQUIRE(is_valid(s));
    REQUIRE(is_valid(a));
    REQUIRE(is_valid(tree));
    CHECK(term_of(s) == t);
    CHECK(term_of(a) == t);
    CHECK(term_of(tree) == t);
    CHECK(top_op(s) == decompose(s).op);
    const auto d = decompose(a);
    CHECK((d.op == Op::F ? step(Op::F, d.first, d.second) : step(d.op, d.first)) == a);
  }
}

TEST_CASE("the span overload of step") {
  const std::vector<StaircaseTiling> two{step(Op::R, kUnitSquare), kUnitSquare};
  CHECK(step<StaircaseTiling>(Op::F, two) == step(Op::F, two[0], two[1]));
  CHECK_THROWS_AS(step<StaircaseTiling>(Op::M, two), DomainError);
}
