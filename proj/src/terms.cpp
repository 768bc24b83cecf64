#include "catbij/terms.hpp"

#include <algorithm>
#include <mutex>

namespace catbij {

char op_code(Op op) {
  switch (op) {
    case Op::M: return 'M';
    case Op::R: return 'R';
    case Op::L: return 'L';
    case Op::F: return 'F';
  }
  return '?';
}

// ---------------------------------------------------------------------------

struct Term::Node {
  TermKind kind;
  Term first;
  Term second;
  int size;
};

namespace {
const Term kEmptyTerm{};
}  // namespace

Term Term::m(Term t) {
  Term out;
  const int sz = t.size() + 1;
  out.node_ = std::make_shared<const Node>(Node{TermKind::M, std::move(t), {}, sz});
  return out;
}

Term Term::r(Term t) {
  if (t.size() < 1) throw DomainError("r(t) requires size(t) >= 1");
  Term out;
  const int sz = t.size() + 1;
  out.node_ = std::make_shared<const Node>(Node{TermKind::R, std::move(t), {}, sz});
  return out;
}

Term Term::l(Term t) {
  if (t.kind() == TermKind::M) throw DomainError("l(t) requires t not of the form m(.)");
  if (t.size() < 2) throw DomainError("l(t) requires size(t) >= 2");
  Term out;
  const int sz = t.size() + 1;
  out.node_ = std::make_shared<const Node>(Node{TermKind::L, std::move(t), {}, sz});
  return out;
}

Term Term::f(Term t1, Term t2) {
  if (t1.kind() == TermKind::M) throw DomainError("f(t1, t2) requires t1 not of the form m(.)");
  if (t1.size() < 2) throw DomainError("f(t1, t2) requires size(t1) >= 2");
  if (t2.size() < 1) throw DomainError("f(t1, t2) requires size(t2) >= 1");
  Term out;
  const int sz = t1.size() + t2.size() + 1;
  out.node_ = std::make_shared<const Node>(Node{TermKind::F, std::move(t1), std::move(t2), sz});
  return out;
}

Term Term::make(Op op, Term t) {
  switch (op) {
    case Op::M: return m(std::move(t));
    case Op::R: return r(std::move(t));
    case Op::L: return l(std::move(t));
    case Op::F: break;
  }
  throw DomainError("f takes two arguments");
}

Term Term::make(Op op, Term t1, Term t2) {
  if (op != Op::F) throw DomainError("only f takes two arguments");
  return f(std::move(t1), std::move(t2));
}

TermKind Term::kind() const noexcept { return node_ ? node_->kind : TermKind::E; }
int Term::size() const noexcept { return node_ ? node_->size : 0; }

const Term& Term::first() const {
  if (!node_) throw std::logic_error("E has no components");
  return node_->first;
}

const Term& Term::second() const {
  if (!node_ || node_->kind != TermKind::F) throw std::logic_error("only f has a second component");
  return node_->second;
}

Op Term::op() const {
  switch (kind()) {
    case TermKind::M: return Op::M;
    case TermKind::R: return Op::R;
    case TermKind::L: return Op::L;
    case TermKind::F: return Op::F;
    case TermKind::E: break;
  }
  throw std::logic_error("E has no constructor");
}

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  // Same non-E kind from here on. Forks compare in written order, t2 first.
  if (a.kind() == TermKind::F)
    if (auto c = a.node_->second <=> b.node_->second; c != 0) return c;
  if (auto c = a.node_->first <=> b.node_->first; c != 0) return c;
  return a.node_->second <=> b.node_->second;
}

// ---------------------------------------------------------------------------
// Right-swept trees.

Op top_op(const RightSweptTree& t) {
  switch (t.kind()) {
    case NodeKind::Leaf:
    case NodeKind::Mid: return Op::M;
    case NodeKind::Right: return Op::R;
    case NodeKind::Left: return Op::L;
    case NodeKind::LeftRight: return Op::F;
  }
  return Op::M;
}

RightSweptTree step(Op op, const RightSweptTree& t) {
  switch (op) {
    case Op::M: return t.empty() ? RightSweptTree::leaf() : RightSweptTree::mid(t);
    case Op::R:
      if (t.size() < 1) throw DomainError("R requires a non-empty tree");
      return RightSweptTree::right(t);
    case Op::L:
      if (t.size() < 1 || top_op(t) == Op::M)
        throw DomainError("L requires a tree whose root is neither a leaf nor has a middle child");
      return RightSweptTree::left(t);
    case Op::F: break;
  }
  throw DomainError("F takes two inputs");
}

RightSweptTree step(Op op, const RightSweptTree& t1, const RightSweptTree& t2) {
  if (op != Op::F) throw DomainError("only F takes two inputs");
  if (t1.size() < 2 || top_op(t1) == Op::M)
    throw DomainError("F requires a first tree of size >= 2 without a middle child at the root");
  if (t2.size() < 1) throw DomainError("F requires a non-empty second tree");
  return RightSweptTree::left_right(t1, t2);
}

namespace detail {

Decomposition<RightSweptTree> decompose_unchecked(const RightSweptTree& t) {
  if (t.empty()) throw DomainError("the empty tree has no decomposition");
  switch (t.kind()) {
    case NodeKind::Leaf: return {Op::M, {}, {}};
    case NodeKind::Mid: return {Op::M, t.middle_child(), {}};
    case NodeKind::Right: return {Op::R, t.right_child(), {}};
    case NodeKind::Left: return {Op::L, t.left_child(), {}};
    case NodeKind::LeftRight: return {Op::F, t.left_child(), t.right_child()};
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Staircase tilings.

namespace {

std::vector<Rect> translated(const std::vector<Rect>& rects, int dr, int dc) {
  std::vector<Rect> out;
  out.reserve(rects.size() + 1);
  for (const auto& r : rects) out.push_back(r.translated(dr, dc));
  return out;
}

const Rect& top_left_rect(const StaircaseTiling& s) {
  for (const auto& r : s.rects())
    if (r.r1 == 1 && r.c1 == 1) return r;
  throw std::logic_error("tiling has no rectangle at (1,1)");
}

bool is_bottom_square(const StaircaseTiling& s) {
  const Rect& last = s.rects().back();
  return last == Rect{s.n(), 1, s.n(), 1};
}

}  // namespace

Op top_op(const StaircaseTiling& s) {
  if (s.n() < 1) throw DomainError("the empty tiling has no constructor");
  if (is_bottom_square(s)) return Op::M;
  const Rect& r0 = top_left_rect(s);
  if (r0.width() == 1) return Op::R;
  if (r0.height() == 1) return Op::L;
  return Op::F;
}

StaircaseTiling step(Op op, const StaircaseTiling& s) {
  const int n = s.n();
  switch (op) {
    case Op::R: {
      if (n < 1) throw DomainError("R requires a non-empty tiling");
      auto rects = translated(s.rects(), 0, 1);
      rects.push_back({1, 1, n + 1, 1});
      return StaircaseTiling(n + 1, std::move(rects));
    }
    case Op::M: {
      auto rects = translated(s.rects(), 0, 1);
      for (auto& r : rects)
        if (r.c1 == 2) r.c1 = 1;
      rects.push_back({n + 1, 1, n + 1, 1});
      return StaircaseTiling(n + 1, std::move(rects));
    }
    case Op::L: {
      if (n < 1 || top_op(s) == Op::M)
        throw DomainError("L requires a tiling without a single square as its bottom-most tile");
      auto rects = translated(s.rects(), 1, 0);
      rects.push_back({1, 1, 1, n + 1});
      return StaircaseTiling(n + 1, std::move(rects));
    }
    case Op::F: break;
  }
  throw DomainError("F takes two inputs");
}

StaircaseTiling step(Op op, const StaircaseTiling& s1, const StaircaseTiling& s2) {
  if (op != Op::F) throw DomainError("only F takes two inputs");
  const int n1 = s1.n();
  const int n2 = s2.n();
  if (n1 < 2 || top_op(s1) == Op::M)
    throw DomainError("F requires a first tiling of size >= 2 without a bottom square");
  if (n2 < 1) throw DomainError("F requires a non-empty second tiling");
  auto rects = translated(s1.rects(), n2 + 1, 0);
  for (const auto& r : s2.rects()) rects.push_back(r.translated(0, n1 + 1));
  rects.push_back({1, 1, n2 + 1, n1 + 1});
  return StaircaseTiling(n1 + n2 + 1, std::move(rects));
}

namespace detail {

Decomposition<StaircaseTiling> decompose_unchecked(const StaircaseTiling& s) {
  const int n = s.n();
  const Op op = top_op(s);
  switch (op) {
    case Op::M: {
      std::vector<Rect> rects;
      rects.reserve(s.rects().size() - 1);
      for (std::size_t i = 0; i + 1 < s.rects().size(); ++i) {
        Rect r = s.rects()[i];
        if (r.c1 == 1) {
          if (r.width() < 2) throw std::logic_error("left-edge rectangle of width 1 in an M image");
          r.c2 -= 1;
        } else {
          r = r.translated(0, -1);
        }
        rects.push_back(r);
      }
      return {Op::M, StaircaseTiling(n - 1, std::move(rects)), {}};
    }
    case Op::R:
    case Op::L: {
      const int dr = op == Op::L ? -1 : 0;
      const int dc = op == Op::R ? -1 : 0;
      std::vector<Rect> rects;
      rects.reserve(s.rects().size() - 1);
      for (const auto& r : s.rects())
        if (!(r.r1 == 1 && r.c1 == 1)) rects.push_back(r.translated(dr, dc));
      return {op, StaircaseTiling(n - 1, std::move(rects)), {}};
    }
    case Op::F: {
      const Rect r0 = top_left_rect(s);
      const int n1 = r0.width() - 1;
      const int n2 = r0.height() - 1;
      std::vector<Rect> below;
      std::vector<Rect> beside;
      for (const auto& r : s.rects()) {
        if (r == r0) continue;
        if (r.r1 > r0.r2) below.push_back(r.translated(-r0.r2, 0));
        else if (r.c1 > r0.c2) beside.push_back(r.translated(0, -r0.c2));
        else throw std::logic_error("rectangle straddles the corner rectangle");
      }
      return {Op::F, StaircaseTiling(n1, std::move(below)), StaircaseTiling(n2, std::move(beside))};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Arc trees.

Op top_op(const ArcTree& a) {
  const int n = a.n();
  if (n < 1) throw DomainError("the single-point arc tree has no constructor");
  const auto& rend = a.rend();
  if (rend[0] == n) return Op::M;
  if (rend[0] == 1) return Op::R;
  if (rend[0] == rend[1]) return Op::L;
  return Op::F;
}

ArcTree step(Op op, const ArcTree& a) {
  const int n = a.n();
  std::vector<int> rend;
  rend.reserve(n + 1);
  rend.push_back(0);
  for (int q : a.rend()) rend.push_back(q + 1);
  switch (op) {
    case Op::R:
      if (n < 1) throw DomainError("R requires a non-empty arc tree");
      rend[0] = 1;
      break;
    case Op::M: rend[0] = n + 1; break;
    case Op::L:
      if (n < 1 || top_op(a) == Op::M)
        throw DomainError("L requires an arc tree without an arc from its first to its last point");
      // Second nearest point visible from the new point without crossing.
      rend[0] = rend[1];
      break;
    case Op::F: throw DomainError("F takes two inputs");
  }
  return ArcTree(std::move(rend));
}

ArcTree step(Op op, const ArcTree& a1, const ArcTree& a2) {
  if (op != Op::F) throw DomainError("only F takes two inputs");
  const int n1 = a1.n();
  const int n2 = a2.n();
  if (n1 < 2 || top_op(a1) == Op::M)
    throw DomainError("F requires a first arc tree of size >= 2 without a first-to-last arc");
  if (n2 < 1) throw DomainError("F requires a non-empty second arc tree");
  std::vector<int> rend;
  rend.reserve(n1 + n2 + 1);
  rend.push_back(n1 + 1);
  for (int q : a1.rend()) rend.push_back(q + 1);
  for (int q : a2.rend()) rend.push_back(q + n1 + 1);
  return ArcTree(std::move(rend));
}

namespace detail {

Decomposition<ArcTree> decompose_unchecked(const ArcTree& a) {
  const Op op = top_op(a);
  const auto& rend = a.rend();
  const int n = a.n();
  if (op != Op::F) {
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int p = 1; p < n; ++p) rest.push_back(rend[p] - 1);
    return {op, ArcTree(std::move(rest)), {}};
  }
  const int q = rend[0];
  std::vector<int> left;
  std::vector<int> right;
  left.reserve(q - 1);
  right.reserve(n - q);
  for (int p = 1; p < q; ++p) left.push_back(rend[p] - 1);
  for (int p = q; p < n; ++p) right.push_back(rend[p] - q);
  return {Op::F, ArcTree(std::move(left)), ArcTree(std::move(right))};
}

}  // namespace detail

// ---------------------------------------------------------------------------

Decomposition<RightSweptTree> decompose(const RightSweptTree& t) {
  require_valid(t);
  return detail::decompose_unchecked(t);
}

Decomposition<StaircaseTiling> decompose(const StaircaseTiling& s) {
  require_valid(s);
  return detail::decompose_unchecked(s);
}

Decomposition<ArcTree> decompose(const ArcTree& a) {
  require_valid(a);
  return detail::decompose_unchecked(a);
}

AnyShape eval(Family family, const Term& term) {
  switch (family) {
    case Family::Tree: return eval<RightSweptTree>(term);
    case Family::Tiling: return eval<StaircaseTiling>(term);
    case Family::Arcs: return eval<ArcTree>(term);
    default: break;
  }
  throw std::invalid_argument("terms evaluate only in the T, S and A families");
}

Term term_of(const AnyShape& shape) {
  return std::visit(
      [](const auto& x) -> Term {
        using Shape = std::decay_t<decltype(x)>;
        if constexpr (ConstructibleShape<Shape>) return term_of(x);
        else throw std::invalid_argument("terms exist only for the T, S and A families");
      },
      shape);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Term> build_level(int n, const std::vector<const std::vector<Term>*>& lower) {
  std::vector<Term> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const auto& prev = *lower[n - 1];
  for (const auto& t : prev) out.push_back(Term::m(t));
  if (n - 1 >= 1)
    for (const auto& t : prev) out.push_back(Term::r(t));
  if (n - 1 >= 2)
    for (const auto& t : prev)
      if (t.kind() != TermKind::M) out.push_back(Term::l(t));
  const std::size_t fork_begin = out.size();
  for (int n1 = 2; n1 <= n - 2; ++n1) {
    const int n2 = n - 1 - n1;
    for (const auto& t1 : *lower[n1]) {
      if (t1.kind() == TermKind::M) continue;
      for (const auto& t2 : *lower[n2]) out.push_back(Term::f(t1, t2));
    }
  }
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(fork_begin), out.end());
  return out;
}

}  // namespace

const std::vector<Term>& enum_terms(int n) {
  if (n < 0) throw std::invalid_argument("enum_terms: negative size");
  static std::mutex mutex;
  static std::vector<std::unique_ptr<const std::vector<Term>>> levels;
  std::lock_guard lock(mutex);
  while (static_cast<int>(levels.size()) <= n) {
    std::vector<const std::vector<Term>*> lower;
    for (const auto& level : levels) lower.push_back(level.get());
    const int k = static_cast<int>(levels.size());
    levels.push_back(std::make_unique<const std::vector<Term>>(build_level(k, lower)));
  }
  return *levels[n];
}

}  // namespace catbij
