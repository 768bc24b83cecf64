#include "catbij/model.hpp"

#include <algorithm>
#include <sstream>

namespace catbij {

char family_code(Family f) {
  switch (f) {
    case Family::Tree: return 'T';
    case Family::Tiling: return 'S';
    case Family::Arcs: return 'A';
    case Family::Binary: return 'B';
    case Family::Planar: return 'P';
  }
  return '?';
}

std::optional<Family> family_from_code(std::string_view code) {
  if (code == "T") return Family::Tree;
  if (code == "S") return Family::Tiling;
  if (code == "A") return Family::Arcs;
  if (code == "B") return Family::Binary;
  if (code == "P") return Family::Planar;
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Tree: return "right-swept tree";
    case Family::Tiling: return "staircase tiling";
    case Family::Arcs: return "arc tree";
    case Family::Binary: return "binary tree";
    case Family::Planar: return "planar tree";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------

struct RightSweptTree::Node {
  NodeKind kind;
  // Left/middle/right child for unary kinds, left child for LeftRight.
  RightSweptTree first;
  // Right child for LeftRight, empty otherwise.
  RightSweptTree second;
  int size;
};

namespace {
const RightSweptTree kEmptyTree{};
const BinaryTree kLeafBinary{};
}  // namespace

RightSweptTree RightSweptTree::make(NodeKind kind, RightSweptTree first, RightSweptTree second) {
  const int sz = 1 + first.size() + second.size();
  return RightSweptTree(
      std::make_shared<const Node>(Node{kind, std::move(first), std::move(second), sz}));
}

RightSweptTree RightSweptTree::leaf() { return make(NodeKind::Leaf, {}, {}); }
RightSweptTree RightSweptTree::mid(RightSweptTree child) { return make(NodeKind::Mid, std::move(child), {}); }
RightSweptTree RightSweptTree::right(RightSweptTree child) {
  return make(NodeKind::Right, std::move(child), {});
}
RightSweptTree RightSweptTree::left(RightSweptTree child) {
  return make(NodeKind::Left, std::move(child), {});
}
RightSweptTree RightSweptTree::left_right(RightSweptTree left, RightSweptTree right) {
  return make(NodeKind::LeftRight, std::move(left), std::move(right));
}

int RightSweptTree::size() const noexcept { return node_ ? node_->size : 0; }

NodeKind RightSweptTree::kind() const {
  if (!node_) throw std::logic_error("kind() of the empty tree");
  return node_->kind;
}

const RightSweptTree& RightSweptTree::left_child() const {
  if (!node_) return kEmptyTree;
  if (node_->kind == NodeKind::Left || node_->kind == NodeKind::LeftRight) return node_->first;
  return kEmptyTree;
}

const RightSweptTree& RightSweptTree::middle_child() const {
  if (node_ && node_->kind == NodeKind::Mid) return node_->first;
  return kEmptyTree;
}

const RightSweptTree& RightSweptTree::right_child() const {
  if (!node_) return kEmptyTree;
  if (node_->kind == NodeKind::Right) return node_->first;
  if (node_->kind == NodeKind::LeftRight) return node_->second;
  return kEmptyTree;
}

bool operator==(const RightSweptTree& a, const RightSweptTree& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const RightSweptTree& a, const RightSweptTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  if (auto c = a.node_->kind <=> b.node_->kind; c != 0) return c;
  if (auto c = a.node_->first <=> b.node_->first; c != 0) return c;
  return a.node_->second <=> b.node_->second;
}

// ---------------------------------------------------------------------------

StaircaseTiling::StaircaseTiling(int n, std::vector<Rect> rects) : n_(n), rects_(std::move(rects)) {
  std::sort(rects_.begin(), rects_.end(), [](const Rect& x, const Rect& y) {
    if (x.r2 != y.r2) return x.r2 < y.r2;
    return x < y;
  });
}

const Rect* StaircaseTiling::find(int r, int c) const {
  for (const auto& rect : rects_)
    if (rect.contains(r, c)) return &rect;
  return nullptr;
}

// ---------------------------------------------------------------------------

struct BinaryTree::Node {
  BinaryTree left;
  BinaryTree right;
  int size;
};

BinaryTree BinaryTree::node(BinaryTree left, BinaryTree right) {
  BinaryTree b;
  const int sz = 1 + left.size() + right.size();
  b.node_ = std::make_shared<const Node>(Node{std::move(left), std::move(right), sz});
  return b;
}

int BinaryTree::size() const noexcept { return node_ ? node_->size : 0; }

const BinaryTree& BinaryTree::left() const { return node_ ? node_->left : kLeafBinary; }
const BinaryTree& BinaryTree::right() const { return node_ ? node_->right : kLeafBinary; }

bool operator==(const BinaryTree& a, const BinaryTree& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (!a.node_) return std::strong_ordering::less;
  if (!b.node_) return std::strong_ordering::greater;
  if (auto c = a.node_->left <=> b.node_->left; c != 0) return c;
  return a.node_->right <=> b.node_->right;
}

int PlanarTree::size() const noexcept {
  int total = 0;
  for (const auto& child : children) total += child.size() + 1;
  return total;
}

bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.children == b.children; }

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
  return std::lexicographical_compare_three_way(a.children.begin(), a.children.end(),
                                                b.children.begin(), b.children.end());
}

// ---------------------------------------------------------------------------

Family family_of(const AnyShape& shape) { return static_cast<Family>(shape.index()); }

int size(const RightSweptTree& t) { return t.size(); }
int size(const StaircaseTiling& s) { return static_cast<int>(s.rects().size()); }
int size(const ArcTree& a) { return a.n(); }
int size(const BinaryTree& b) { return b.size(); }
int size(const PlanarTree& p) { return p.size(); }
int size(const AnyShape& shape) {
  return std::visit([](const auto& x) { return size(x); }, shape);
}

// ---------------------------------------------------------------------------

namespace {

void validate_tree(const RightSweptTree& t, bool in_left_slot, const std::string& path,
                   std::vector<Violation>& out) {
  if (t.empty()) return;
  if (in_left_slot) {
    if (t.kind() == NodeKind::Leaf) out.push_back({path, "left child is a leaf"});
    if (t.kind() == NodeKind::Mid) out.push_back({path, "left child has a middle child"});
  }
  if (t.has_left()) validate_tree(t.left_child(), true, path + "/L", out);
  if (t.has_middle()) validate_tree(t.middle_child(), false, path + "/M", out);
  if (t.has_right()) validate_tree(t.right_child(), false, path + "/R", out);
}

std::string rect_locus(std::size_t i) { return "rect[" + std::to_string(i) + "]"; }

}  // namespace

std::vector<Violation> validate(const RightSweptTree& t) {
  std::vector<Violation> out;
  validate_tree(t, false, "root", out);
  return out;
}

std::vector<Violation> validate(const StaircaseTiling& s) {
  std::vector<Violation> out;
  const int n = s.n();
  const auto& rects = s.rects();
  if (n < 0) {
    out.push_back({"n", "negative size"});
    return out;
  }
  if (static_cast<int>(rects.size()) != n) {
    out.push_back({"rects", "expected " + std::to_string(n) + " rectangles, found " +
                                std::to_string(rects.size())});
    return out;
  }

  std::vector<int> cover(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const Rect& r = rects[i];
    if (r.r1 < 1 || r.c1 < 1 || r.r1 > r.r2 || r.c1 > r.c2) {
      out.push_back({rect_locus(i), "malformed corners"});
      continue;
    }
    if (r.r2 + r.c2 != n + 1)
      out.push_back({rect_locus(i), "bottom-right corner is not on the diagonal"});
    if (static_cast<int>(i) + 1 != r.r2)
      out.push_back({rect_locus(i), "does not own diagonal cell of row " + std::to_string(i + 1)});
    for (int row = r.r1; row <= r.r2; ++row) {
      for (int col = r.c1; col <= r.c2; ++col) {
        if (row + col > n + 1) {
          out.push_back({rect_locus(i), "leaves the staircase at cell (" + std::to_string(row) +
                                            "," + std::to_string(col) + ")"});
          row = r.r2;
          break;
        }
        ++cover[static_cast<std::size_t>(row - 1) * n + (col - 1)];
      }
    }
  }
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; row + col <= n + 1; ++col) {
      const int k = cover[static_cast<std::size_t>(row - 1) * n + (col - 1)];
      if (k == 0)
        out.push_back({"cell (" + std::to_string(row) + "," + std::to_string(col) + ")", "uncovered"});
      else if (k > 1)
        out.push_back({"cell (" + std::to_string(row) + "," + std::to_string(col) + ")",
                       "covered " + std::to_string(k) + " times"});
    }
  }
  return out;
}

std::vector<Violation> validate(const ArcTree& a) {
  std::vector<Violation> out;
  const int n = a.n();
  const auto& rend = a.rend();
  bool ranges_ok = true;
  for (int p = 0; p < n; ++p) {
    const std::string locus = "rend[" + std::to_string(p) + "]";
    if (rend[p] <= p) {
      out.push_back({locus, "rend[" + std::to_string(p) + "]=" + std::to_string(rend[p]) + " not > " +
                                std::to_string(p)});
      ranges_ok = false;
    } else if (rend[p] > n) {
      out.push_back({locus, "rend[" + std::to_string(p) + "]=" + std::to_string(rend[p]) +
                                " beyond the rightmost point " + std::to_string(n)});
      ranges_ok = false;
    }
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (q < rend[p] && rend[p] < rend[q])
        out.push_back({"arcs " + std::to_string(p) + "," + std::to_string(q),
                       "arc " + std::to_string(p) + "-" + std::to_string(rend[p]) + " crosses arc " +
                           std::to_string(q) + "-" + std::to_string(rend[q])});
  if (ranges_ok) {
    // Redundant given the two checks above.
    for (int p = 0; p < n; ++p) {
      int at = p;
      int steps = 0;
      while (at != n && steps <= n) {
        at = rend[at];
        ++steps;
      }
      if (at != n)
        out.push_back({"point " + std::to_string(p), "no path to the rightmost point"});
    }
  }
  return out;
}

std::vector<Violation> validate(const BinaryTree&) { return {}; }
std::vector<Violation> validate(const PlanarTree&) { return {}; }

std::vector<Violation> validate(const AnyShape& shape) {
  return std::visit([](const auto& x) { return validate(x); }, shape);
}

std::vector<Violation> validate(Family family, const AnyShape& shape) {
  if (family_of(shape) != family)
    return {{"family", "expected a " + std::string(family_name(family)) + ", got a " +
                           std::string(family_name(family_of(shape)))}};
  return validate(shape);
}

}  // namespace catbij
