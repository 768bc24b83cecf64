#include "catbij/beta.hpp"

#include <algorithm>
#include <map>

namespace catbij {

bool immediately_right_of(const Rect& b, const Rect& a) {
  return a.c2 + 1 == b.c1 && a.r1 == b.r1 && std::max(a.r1, b.r1) <= std::min(a.r2, b.r2);
}

bool immediately_below(const Rect& b, const Rect& a) {
  return a.r2 + 1 == b.r1 && std::max(a.c1, b.c1) <= std::min(a.c2, b.c2);
}

namespace {

// Maps `t` into the size-|t| staircase whose cell (1,1) sits at global
// (dr + 1, dc + 1).
void place(const RightSweptTree& t, int dr, int dc, const std::string& path,
           std::vector<NodeRect>& out) {
  if (t.empty()) return;
  const int n = t.size();
  switch (t.kind()) {
    case NodeKind::Leaf:
      out.push_back({path, Rect{1, 1, 1, 1}.translated(dr, dc)});
      return;
    case NodeKind::Right:
      out.push_back({path, Rect{1, 1, n, 1}.translated(dr, dc)});
      place(t.right_child(), dr, dc + 1, path + "R", out);
      return;
    case NodeKind::Mid:
      out.push_back({path, Rect{1, 1, 1, n}.translated(dr, dc)});
      place(t.middle_child(), dr + 1, dc, path + "M", out);
      return;
    case NodeKind::Left:
    case NodeKind::LeftRight: break;
  }

  // Left spine, root first.
  std::vector<const RightSweptTree*> spine;
  std::vector<std::string> paths;
  const RightSweptTree* v = &t;
  std::string p = path;
  while (true) {
    spine.push_back(v);
    paths.push_back(p);
    if (!v->has_left()) break;
    v = &v->left_child();
    p += "L";
  }
  if (spine.back()->has_middle()) throw std::logic_error("left child with a middle child");

  int col = 1;
  for (std::size_t k = spine.size(); k-- > 0;) {
    const RightSweptTree& node = *spine[k];
    const int width = node.right_child().size() + 1;
    const int last_col = col + width - 1;
    const int height = n + 1 - last_col;
    if (height < 1) throw std::logic_error("spine rectangle leaves the staircase");
    out.push_back({paths[k], Rect{1, col, height, last_col}.translated(dr, dc)});
    place(node.right_child(), dr + height, dc + col - 1, paths[k] + "R", out);
    col = last_col + 1;
  }
  if (col != n + 1) throw std::logic_error("spine chain does not reach the last column");
}

RightSweptTree build(const std::vector<Rect>& rects, int n) {
  if (n == 0) return {};
  const Rect* r0 = nullptr;
  for (const auto& r : rects)
    if (r.r1 == 1 && r.c1 == 1) r0 = &r;
  if (r0 == nullptr) throw std::logic_error("no rectangle at (1,1)");

  if (r0->width() == 1 || r0->height() == 1) {
    if (n == 1) return RightSweptTree::leaf();
    const bool column = r0->width() == 1;
    std::vector<Rect> rest;
    rest.reserve(rects.size() - 1);
    for (const auto& r : rects)
      if (&r != r0) rest.push_back(column ? r.translated(0, -1) : r.translated(-1, 0));
    auto child = build(rest, n - 1);
    return column ? RightSweptTree::right(std::move(child)) : RightSweptTree::mid(std::move(child));
  }

  std::vector<Rect> chain;
  for (const auto& r : rects)
    if (r.r1 == 1) chain.push_back(r);
  std::sort(chain.begin(), chain.end(), [](const Rect& a, const Rect& b) { return a.c1 < b.c1; });

  std::vector<std::vector<Rect>> regions(chain.size());
  for (const auto& r : rects) {
    if (r.r1 == 1) continue;
    bool placed = false;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const Rect& top = chain[i];
      if (r.c1 >= top.c1 && r.c2 <= top.c2) {
        regions[i].push_back(r.translated(-top.r2, -(top.c1 - 1)));
        placed = true;
        break;
      }
    }
    if (!placed) throw std::logic_error("rectangle straddles two chain columns");
  }

  RightSweptTree spine;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    auto sub = build(regions[i], chain[i].width() - 1);
    if (i == 0) spine = RightSweptTree::right(std::move(sub));
    else if (sub.empty()) spine = RightSweptTree::left(std::move(spine));
    else spine = RightSweptTree::left_right(std::move(spine), std::move(sub));
  }
  return spine;
}

}  // namespace

std::vector<NodeRect> beta_correspondence(const RightSweptTree& t) {
  require_valid(t);
  std::vector<NodeRect> out;
  out.reserve(static_cast<std::size_t>(t.size()));
  place(t, 0, 0, "", out);
  return out;
}

StaircaseTiling beta(const RightSweptTree& t) {
  auto corr = beta_correspondence(t);
  std::vector<Rect> rects;
  rects.reserve(corr.size());
  for (auto& nr : corr) rects.push_back(nr.rect);
  return StaircaseTiling(t.size(), std::move(rects));
}

RightSweptTree beta_inv(const StaircaseTiling& s) {
  require_valid(s);
  return build(s.rects(), s.n());
}

// ---------------------------------------------------------------------------

namespace {

struct RuleChecker {
  std::map<std::string, Rect> rect_of;
  std::vector<RuleViolation> report;

  void fail(BetaRule rule, const std::string& parent, const std::string& child, std::string msg) {
    report.push_back({rule, parent.empty() ? "root" : parent, child, std::move(msg)});
  }

  void visit(const RightSweptTree& a, const std::string& path, bool is_left_child) {
    if (a.empty()) return;
    const Rect& ra = rect_of.at(path);

    if (a.has_left()) {
      const std::string child = path + "L";
      if (!immediately_right_of(ra, rect_of.at(child)))
        fail(BetaRule::LeftChild, path, child, "parent is not immediately right of its left child");
      visit(a.left_child(), child, true);
    }
    if (a.has_middle()) {
      const std::string child = path + "M";
      if (!immediately_below(rect_of.at(child), ra))
        fail(BetaRule::MiddleChild, path, child, "middle child is not immediately below");
      visit(a.middle_child(), child, false);
    }
    if (a.has_right()) {
      const std::string child = path + "R";
      const RightSweptTree& b = a.right_child();
      const Rect& rb = rect_of.at(child);
      const bool below_context = is_left_child || a.has_left();

      if (!b.has_left()) {
        if (below_context) {
          if (!immediately_below(rb, ra))
            fail(BetaRule::RightOffLeft, path, child, "right child is not immediately below");
        } else if (!immediately_right_of(rb, ra)) {
          fail(BetaRule::LoneRightChild, path, child, "lone right child is not immediately right");
        }
      } else {
        // The left chain of b lies between a and b.
        std::string deepest = child;
        const RightSweptTree* d = &b;
        std::vector<std::string> chain{child};
        while (d->has_left()) {
          d = &d->left_child();
          deepest += "L";
          chain.push_back(deepest);
        }
        const Rect& rd = rect_of.at(deepest);
        const bool anchored = below_context ? immediately_below(rd, ra) : immediately_right_of(rd, ra);
        if (!anchored)
          fail(BetaRule::RightWithLeft, path, deepest,
               below_context ? "left chain does not start immediately below the parent"
                             : "left chain does not start immediately right of the parent");
        for (std::size_t i = 1; i < chain.size(); ++i) {
          const Rect& rc = rect_of.at(chain[i]);
          if (rc.r1 != rb.r1 || rc.c2 >= rb.c1)
            fail(BetaRule::RightWithLeft, child, chain[i], "chain rectangle is not left of the right child");
          if (!below_context && rc.c1 <= ra.c2)
            fail(BetaRule::RightWithLeft, path, chain[i], "chain rectangle is not right of the parent");
        }
        if (!below_context && (rb.r1 != ra.r1 || rb.c1 <= ra.c2))
          fail(BetaRule::RightWithLeft, path, child, "right child is not right of the parent");
        if (below_context && rb.r1 != ra.r2 + 1)
          fail(BetaRule::RightWithLeft, path, child, "right child is not in the band below the parent");
      }
      visit(b, child, false);
    }
  }
};

}  // namespace

std::vector<RuleViolation> check_beta_rules(const RightSweptTree& t, const StaircaseTiling& s) {
  RuleChecker checker;
  const auto corr = beta_correspondence(t);
  std::vector<Rect> rects;
  for (const auto& nr : corr) {
    checker.rect_of.emplace(nr.path, nr.rect);
    rects.push_back(nr.rect);
  }
  if (StaircaseTiling(t.size(), std::move(rects)) != s)
    checker.report.push_back({BetaRule::Correspondence, "root", "", "tiling is not the image of the tree"});
  checker.visit(t, "", false);
  return checker.report;
}

}  // namespace catbij
