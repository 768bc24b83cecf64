#pragma once

// The construction calculus. Each family carries four size-increasing
// constructors:
//
//   M  new root/column/point joined through the "middle"   (any size n >= 0)
//   R  new root/column/point joined on the "right"         (n >= 1)
//   L  new root/row/point joined on the "left"             (input not an M image)
//   F  fork of two shapes t1, t2                          (t1 not an M image,
//                                                           |t1| >= 2, |t2| >= 1)
//
// Every shape of size n >= 1 is the image of exactly one constructor applied
// to uniquely determined inputs, so every shape has a unique construction
// term over {E, m, r, l, f}. Evaluating a term in another family gives the
// recursive bijection (see alpha.hpp).

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "catbij/model.hpp"

namespace catbij {

enum class Op : std::uint8_t { M, R, L, F };

char op_code(Op op);  // 'M', 'R', 'L', 'F'

// ---------------------------------------------------------------------------

// Term kinds in enumeration order: E < m < r < l < f.
enum class TermKind : std::uint8_t { E, M, R, L, F };

class Term {
 public:
  // E, the size-0 element.
  Term() = default;

  // These enforce the constructor domains and throw DomainError. t1 is the
  // restricted fork input; the text form and the ordering list t2 first.
  static Term m(Term t);
  static Term r(Term t);
  static Term l(Term t);
  static Term f(Term t1, Term t2);
  static Term make(Op op, Term t);
  static Term make(Op op, Term t1, Term t2);

  TermKind kind() const noexcept;
  bool is_empty() const noexcept { return node_ == nullptr; }
  int size() const noexcept;
  // Precondition: kind() != E. second() only for kind() == F.
  const Term& first() const;
  const Term& second() const;
  Op op() const;

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Constructors per family. Inputs must be valid; domain violations throw
// DomainError.

RightSweptTree step(Op op, const RightSweptTree& t);
StaircaseTiling step(Op op, const StaircaseTiling& s);
ArcTree step(Op op, const ArcTree& a);

// F only.
RightSweptTree step(Op op, const RightSweptTree& t1, const RightSweptTree& t2);
StaircaseTiling step(Op op, const StaircaseTiling& s1, const StaircaseTiling& s2);
ArcTree step(Op op, const ArcTree& a1, const ArcTree& a2);

template <ConstructibleShape Shape>
Shape step(Op op, std::span<const Shape> inputs) {
  if (op == Op::F) {
    if (inputs.size() != 2) throw DomainError("F takes two inputs");
    return step(op, inputs[0], inputs[1]);
  }
  if (inputs.size() != 1) throw DomainError("unary constructor takes one input");
  return step(op, inputs[0]);
}

// The constructor that produced a valid shape of size >= 1, without building
// the components.
Op top_op(const RightSweptTree& t);
Op top_op(const StaircaseTiling& s);
Op top_op(const ArcTree& a);

template <ConstructibleShape Shape>
struct Decomposition {
  Op op = Op::M;
  Shape first;
  Shape second;  // meaningful only for op == F

  bool operator==(const Decomposition&) const = default;
};

// Inverse of step. Throws InvalidShape for invalid input and DomainError for
// the size-0 shape.
Decomposition<RightSweptTree> decompose(const RightSweptTree& t);
Decomposition<StaircaseTiling> decompose(const StaircaseTiling& s);
Decomposition<ArcTree> decompose(const ArcTree& a);

namespace detail {
// Same as decompose, minus the validation.
Decomposition<RightSweptTree> decompose_unchecked(const RightSweptTree& t);
Decomposition<StaircaseTiling> decompose_unchecked(const StaircaseTiling& s);
Decomposition<ArcTree> decompose_unchecked(const ArcTree& a);
}  // namespace detail

// ---------------------------------------------------------------------------

template <ConstructibleShape Shape>
Term term_of_unchecked(const Shape& shape) {
  if (size(shape) == 0) return Term{};
  auto d = detail::decompose_unchecked(shape);
  if (d.op == Op::F) return Term::f(term_of_unchecked(d.first), term_of_unchecked(d.second));
  return Term::make(d.op, term_of_unchecked(d.first));
}

// The unique term whose evaluation is `shape`. Throws InvalidShape.
template <ConstructibleShape Shape>
Term term_of(const Shape& shape) {
  require_valid(shape);
  return term_of_unchecked(shape);
}

template <ConstructibleShape Shape>
Shape eval(const Term& term) {
  switch (term.kind()) {
    case TermKind::E: return Shape{};
    case TermKind::F: return step(Op::F, eval<Shape>(term.first()), eval<Shape>(term.second()));
    default: return step(term.op(), eval<Shape>(term.first()));
  }
}

AnyShape eval(Family family, const Term& term);
// Family must be T, S or A.
Term term_of(const AnyShape& shape);

// All terms of size n in lexicographic order. The result is cached and shared
// across threads.
const std::vector<Term>& enum_terms(int n);

}  // namespace catbij
