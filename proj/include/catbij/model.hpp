#pragma once

// Shape families counted by the Catalan numbers.
//
//   T  right-swept trees      (RightSweptTree)
//   S  staircase tilings      (StaircaseTiling)
//   A  arc trees              (ArcTree)
//   B  planar binary trees    (BinaryTree)
//   P  planar rooted trees    (PlanarTree)
//
// Every value is immutable once built and compares structurally, so sets of
// shapes can be compared exactly.

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "catbij/errors.hpp"

namespace catbij {

enum class Family : std::uint8_t { Tree, Tiling, Arcs, Binary, Planar };

char family_code(Family f);
std::optional<Family> family_from_code(std::string_view code);
std::string_view family_name(Family f);

// ---------------------------------------------------------------------------
// Right-swept trees.

enum class NodeKind : std::uint8_t { Leaf, Mid, Right, Left, LeftRight };

class RightSweptTree {
 public:
  // The empty tree, the single element of size 0.
  RightSweptTree() = default;

  static RightSweptTree leaf();
  static RightSweptTree mid(RightSweptTree child);
  static RightSweptTree right(RightSweptTree child);
  static RightSweptTree left(RightSweptTree child);
  static RightSweptTree left_right(RightSweptTree left, RightSweptTree right);

  bool empty() const noexcept { return node_ == nullptr; }
  int size() const noexcept;

  // Precondition: !empty().
  NodeKind kind() const;

  // Child in the given slot, or the empty tree when the slot is vacant.
  const RightSweptTree& left_child() const;
  const RightSweptTree& middle_child() const;
  const RightSweptTree& right_child() const;

  bool has_left() const { return !left_child().empty(); }
  bool has_middle() const { return !middle_child().empty(); }
  bool has_right() const { return !right_child().empty(); }

  friend bool operator==(const RightSweptTree& a, const RightSweptTree& b);
  friend std::strong_ordering operator<=>(const RightSweptTree& a, const RightSweptTree& b);

 private:
  struct Node;
  explicit RightSweptTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static RightSweptTree make(NodeKind kind, RightSweptTree first, RightSweptTree second);

  std::shared_ptr<const Node> node_;
};

// ---------------------------------------------------------------------------
// Staircase tilings. Rows run 1..n top to bottom, columns 1..n left to right,
// and the staircase is {(r, c) : r + c <= n + 1}.

struct Rect {
  int r1 = 1;
  int c1 = 1;
  int r2 = 1;
  int c2 = 1;

  int width() const noexcept { return c2 - c1 + 1; }
  int height() const noexcept { return r2 - r1 + 1; }
  bool contains(int r, int c) const noexcept { return r1 <= r && r <= r2 && c1 <= c && c <= c2; }
  Rect translated(int dr, int dc) const noexcept { return {r1 + dr, c1 + dc, r2 + dr, c2 + dc}; }

  auto operator<=>(const Rect&) const = default;
};

class StaircaseTiling {
 public:
  StaircaseTiling() = default;
  // Rectangles are put in canonical order (by r2, i.e. along the diagonal
  // from top-right to bottom-left). No validation happens here.
  StaircaseTiling(int n, std::vector<Rect> rects);

  int n() const noexcept { return n_; }
  const std::vector<Rect>& rects() const noexcept { return rects_; }

  // Rectangle covering cell (r, c), if any.
  const Rect* find(int r, int c) const;

  auto operator<=>(const StaircaseTiling&) const = default;

 private:
  int n_ = 0;
  std::vector<Rect> rects_;
};

// ---------------------------------------------------------------------------
// Arc trees on points 0..n; rend()[p] is the right end of the arc leaving p.

class ArcTree {
 public:
  ArcTree() = default;
  explicit ArcTree(std::vector<int> rend) : rend_(std::move(rend)) {}

  int n() const noexcept { return static_cast<int>(rend_.size()); }
  const std::vector<int>& rend() const noexcept { return rend_; }

  auto operator<=>(const ArcTree&) const = default;

 private:
  std::vector<int> rend_;
};

// ---------------------------------------------------------------------------
// Classical companions.

class BinaryTree {
 public:
  BinaryTree() = default;  // a leaf
  static BinaryTree node(BinaryTree left, BinaryTree right);

  bool is_leaf() const noexcept { return node_ == nullptr; }
  // Internal node count.
  int size() const noexcept;
  const BinaryTree& left() const;
  const BinaryTree& right() const;

  friend bool operator==(const BinaryTree& a, const BinaryTree& b);
  friend std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct PlanarTree {
  std::vector<PlanarTree> children;

  // Edge count.
  int size() const noexcept;

  friend bool operator==(const PlanarTree& a, const PlanarTree& b);
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b);
};

// ---------------------------------------------------------------------------

using AnyShape = std::variant<RightSweptTree, StaircaseTiling, ArcTree, BinaryTree, PlanarTree>;

Family family_of(const AnyShape& shape);

int size(const RightSweptTree& t);
int size(const StaircaseTiling& s);
int size(const ArcTree& a);
int size(const BinaryTree& b);
int size(const PlanarTree& p);
int size(const AnyShape& shape);

// Every violated invariant; empty means valid.
std::vector<Violation> validate(const RightSweptTree& t);
std::vector<Violation> validate(const StaircaseTiling& s);
std::vector<Violation> validate(const ArcTree& a);
std::vector<Violation> validate(const BinaryTree& b);
std::vector<Violation> validate(const PlanarTree& p);
std::vector<Violation> validate(const AnyShape& shape);
// Also reports a family mismatch between `family` and the held alternative.
std::vector<Violation> validate(Family family, const AnyShape& shape);

template <class Shape>
bool is_valid(const Shape& shape) {
  return validate(shape).empty();
}

// Throws InvalidShape when validation fails.
template <class Shape>
void require_valid(const Shape& shape) {
  if (auto v = validate(shape); !v.empty()) throw InvalidShape(std::move(v));
}

// The three families the construction calculus works over.
template <class Shape>
concept ConstructibleShape = std::same_as<Shape, RightSweptTree> ||
                             std::same_as<Shape, StaircaseTiling> || std::same_as<Shape, ArcTree>;

template <ConstructibleShape Shape>
constexpr Family family_of() {
  if constexpr (std::same_as<Shape, RightSweptTree>) return Family::Tree;
  else if constexpr (std::same_as<Shape, StaircaseTiling>) return Family::Tiling;
  else return Family::Arcs;
}

}  // namespace catbij
