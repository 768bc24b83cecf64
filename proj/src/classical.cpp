#include "catbij/classical.hpp"

#include "catbij/alpha.hpp"

namespace catbij {

namespace {

BinaryTree to_binary(const std::vector<Rect>& rects, int n) {
  if (n == 0) return {};
  const Rect* r0 = nullptr;
  for (const auto& r : rects)
    if (r.r1 == 1 && r.c1 == 1) r0 = &r;
  if (r0 == nullptr) throw std::logic_error("no rectangle at (1,1)");
  const int h = r0->r2;
  std::vector<Rect> beside;
  std::vector<Rect> below;
  for (const auto& r : rects) {
    if (&r == r0) continue;
    if (r.c1 > r0->c2) beside.push_back(r.translated(0, -r0->c2));
    else below.push_back(r.translated(-h, 0));
  }
  return BinaryTree::node(to_binary(beside, h - 1), to_binary(below, n - h));
}

void to_tiling(const BinaryTree& b, int dr, int dc, std::vector<Rect>& out) {
  if (b.is_leaf()) return;
  const int n = b.size();
  const int h = b.left().size() + 1;
  const int w = n + 1 - h;
  out.push_back(Rect{1, 1, h, w}.translated(dr, dc));
  to_tiling(b.left(), dr, dc + w, out);
  to_tiling(b.right(), dr + h, dc, out);
}

PlanarTree subtree_at(int v, const std::vector<std::vector<int>>& children) {
  PlanarTree t;
  t.children.reserve(children[v].size());
  for (int c : children[v]) t.children.push_back(subtree_at(c, children));
  return t;
}

// Post-order numbering: every vertex comes right after its descendants.
int number(const PlanarTree& t, std::vector<int>& rend) {
  std::vector<int> ids;
  ids.reserve(t.children.size());
  for (const auto& c : t.children) ids.push_back(number(c, rend));
  const int me = static_cast<int>(rend.size());
  rend.push_back(-1);
  for (int id : ids) rend[id] = me;
  return me;
}

}  // namespace

BinaryTree tiling_to_binary(const StaircaseTiling& s) {
  require_valid(s);
  return to_binary(s.rects(), s.n());
}

StaircaseTiling binary_to_tiling(const BinaryTree& b) {
  std::vector<Rect> rects;
  rects.reserve(static_cast<std::size_t>(b.size()));
  to_tiling(b, 0, 0, rects);
  return StaircaseTiling(b.size(), std::move(rects));
}

PlanarTree arcs_to_planar(const ArcTree& a) {
  require_valid(a);
  std::vector<std::vector<int>> children(static_cast<std::size_t>(a.n()) + 1);
  for (int p = 0; p < a.n(); ++p) children[a.rend()[p]].push_back(p);
  return subtree_at(a.n(), children);
}

ArcTree planar_to_arcs(const PlanarTree& p) {
  std::vector<int> rend;
  rend.reserve(static_cast<std::size_t>(p.size()) + 1);
  number(p, rend);
  rend.pop_back();  // the root
  return ArcTree(std::move(rend));
}

AnyShape induced(Family from, Family to, const AnyShape& shape) {
  if (auto v = validate(from, shape); !v.empty()) throw InvalidShape(std::move(v));

  AnyShape core = shape;
  if (from == Family::Binary) core = binary_to_tiling(std::get<BinaryTree>(shape));
  else if (from == Family::Planar) core = planar_to_arcs(std::get<PlanarTree>(shape));

  Family core_to = to;
  if (to == Family::Binary) core_to = Family::Tiling;
  else if (to == Family::Planar) core_to = Family::Arcs;

  AnyShape image = alpha(core_to, core);
  if (to == Family::Binary) return tiling_to_binary(std::get<StaircaseTiling>(image));
  if (to == Family::Planar) return arcs_to_planar(std::get<ArcTree>(image));
  return image;
}

}  // namespace catbij
