#include "catbij/codec.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace catbij {

// ---------------------------------------------------------------------------
// Formatting.

namespace {

void put(std::string& out, const Term& t) {
  switch (t.kind()) {
    case TermKind::E: out += 'E'; return;
    case TermKind::M: out += "m("; break;
    case TermKind::R: out += "r("; break;
    case TermKind::L: out += "l("; break;
    case TermKind::F:
      // Written with the unrestricted argument first.
      out += "f(";
      put(out, t.second());
      out += ',';
      put(out, t.first());
      out += ')';
      return;
  }
  put(out, t.first());
  out += ')';
}

void put(std::string& out, const RightSweptTree& t) {
  switch (t.kind()) {
    case NodeKind::Leaf: out += '*'; return;
    case NodeKind::Mid: out += "M("; put(out, t.middle_child()); break;
    case NodeKind::Right: out += "R("; put(out, t.right_child()); break;
    case NodeKind::Left: out += "L("; put(out, t.left_child()); break;
    case NodeKind::LeftRight:
      out += "B(";
      put(out, t.left_child());
      out += ',';
      put(out, t.right_child());
      break;
  }
  out += ')';
}

void put(std::string& out, const BinaryTree& b) {
  if (b.is_leaf()) {
    out += '.';
    return;
  }
  out += '(';
  put(out, b.left());
  out += ',';
  put(out, b.right());
  out += ')';
}

void put(std::string& out, const PlanarTree& p) {
  out += '(';
  for (std::size_t i = 0; i < p.children.size(); ++i) {
    if (i) out += ' ';
    put(out, p.children[i]);
  }
  out += ')';
}

}  // namespace

std::string format(const Term& t) {
  std::string out;
  put(out, t);
  return out;
}

std::string format(const RightSweptTree& t) {
  if (t.empty()) return "~";
  std::string out;
  put(out, t);
  return out;
}

std::string format(const StaircaseTiling& s) {
  std::string out = "S" + std::to_string(s.n()) + "[";
  for (std::size_t i = 0; i < s.rects().size(); ++i) {
    const Rect& r = s.rects()[i];
    if (i) out += ';';
    out += std::to_string(r.r1) + ',' + std::to_string(r.c1) + ',' + std::to_string(r.r2) + ',' +
           std::to_string(r.c2);
  }
  out += ']';
  return out;
}

std::string format(const ArcTree& a) {
  std::string out = "A" + std::to_string(a.n()) + "[";
  for (int p = 0; p < a.n(); ++p) {
    if (p) out += ',';
    out += std::to_string(a.rend()[p]);
  }
  out += ']';
  return out;
}

std::string format(const BinaryTree& b) {
  std::string out;
  put(out, b);
  return out;
}

std::string format(const PlanarTree& p) {
  std::string out;
  put(out, p);
  return out;
}

std::string format(const AnyShape& shape) {
  return std::visit([](const auto& x) { return format(x); }, shape);
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

constexpr int kMaxDepth = 4096;
constexpr long kMaxNumber = 1'000'000;

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  char take() {
    const char c = peek();
    if (c == '\0') fail("unexpected end of input");
    ++pos_;
    return c;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    ++pos_;
  }

  int number() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > kMaxNumber) throw SyntaxError(start, "number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number" + found());
    return static_cast<int>(value);
  }

  void finish() {
    if (peek() != '\0') fail("trailing input" + found());
  }

  std::size_t pos() {
    skip_ws();
    return pos_;
  }

  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(pos_, what); }

  struct DepthGuard {
    Reader& in;
    explicit DepthGuard(Reader& r) : in(r) {
      if (++in.depth_ > kMaxDepth) in.fail("nesting too deep");
    }
    ~DepthGuard() { --in.depth_; }
  };

 private:
  std::string found() {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

[[noreturn]] void invariant_at(std::size_t pos, const std::string& what) {
  throw InvariantError({{"byte " + std::to_string(pos), what}});
}

Term read_term(Reader& in) {
  Reader::DepthGuard guard(in);
  const std::size_t at = in.pos();
  const char c = in.take();
  if (c == 'E') return Term{};
  Op op;
  switch (c) {
    case 'm': op = Op::M; break;
    case 'r': op = Op::R; break;
    case 'l': op = Op::L; break;
    case 'f': op = Op::F; break;
    default: throw SyntaxError(at, std::string("unknown term symbol '") + c + "'");
  }
  in.expect('(');
  Term first = read_term(in);
  Term second;
  if (op == Op::F) {
    in.expect(',');
    second = read_term(in);
  }
  in.expect(')');
  try {
    return op == Op::F ? Term::f(std::move(second), std::move(first)) : Term::make(op, std::move(first));
  } catch (const DomainError& e) {
    invariant_at(at, e.what());
  }
}

RightSweptTree read_tree(Reader& in) {
  Reader::DepthGuard guard(in);
  const std::size_t at = in.pos();
  const char c = in.take();
  if (c == '*') return RightSweptTree::leaf();
  if (c == '~') throw SyntaxError(at, "the empty tree '~' may only appear on its own");
  if (c != 'M' && c != 'R' && c != 'L' && c != 'B')
    throw SyntaxError(at, std::string("unknown tree symbol '") + c + "'");
  in.expect('(');
  RightSweptTree first = read_tree(in);
  RightSweptTree second;
  if (c == 'B') {
    in.expect(',');
    second = read_tree(in);
  }
  in.expect(')');
  switch (c) {
    case 'M': return RightSweptTree::mid(std::move(first));
    case 'R': return RightSweptTree::right(std::move(first));
    case 'L': return RightSweptTree::left(std::move(first));
    default: return RightSweptTree::left_right(std::move(first), std::move(second));
  }
}

BinaryTree read_binary(Reader& in) {
  Reader::DepthGuard guard(in);
  const std::size_t at = in.pos();
  const char c = in.take();
  if (c == '.') return {};
  if (c != '(') throw SyntaxError(at, "expected '.' or '('");
  BinaryTree left = read_binary(in);
  in.expect(',');
  BinaryTree right = read_binary(in);
  in.expect(')');
  return BinaryTree::node(std::move(left), std::move(right));
}

PlanarTree read_planar(Reader& in) {
  Reader::DepthGuard guard(in);
  in.expect('(');
  PlanarTree t;
  while (in.peek() == '(') t.children.push_back(read_planar(in));
  in.expect(')');
  return t;
}

template <class Shape>
Shape checked(Shape shape) {
  if (auto v = validate(shape); !v.empty()) throw InvariantError(std::move(v));
  return shape;
}

}  // namespace

Term parse_term(std::string_view text) {
  Reader in(text);
  Term t = read_term(in);
  in.finish();
  return t;
}

RightSweptTree parse_tree(std::string_view text) {
  Reader in(text);
  if (in.peek() == '~') {
    in.take();
    in.finish();
    return {};
  }
  RightSweptTree t = read_tree(in);
  in.finish();
  return checked(std::move(t));
}

StaircaseTiling parse_tiling(std::string_view text) {
  Reader in(text);
  in.expect('S');
  const int n = in.number();
  in.expect('[');
  std::vector<Rect> rects;
  if (in.peek() != ']') {
    while (true) {
      Rect r;
      r.r1 = in.number();
      in.expect(',');
      r.c1 = in.number();
      in.expect(',');
      r.r2 = in.number();
      in.expect(',');
      r.c2 = in.number();
      rects.push_back(r);
      if (in.peek() != ';') break;
      in.take();
    }
  }
  in.expect(']');
  in.finish();
  return checked(StaircaseTiling(n, std::move(rects)));
}

ArcTree parse_arcs(std::string_view text) {
  Reader in(text);
  in.expect('A');
  const std::size_t n_at = in.pos();
  const int n = in.number();
  in.expect('[');
  std::vector<int> rend;
  if (in.peek() != ']') {
    while (true) {
      rend.push_back(in.number());
      if (in.peek() != ',') break;
      in.take();
    }
  }
  in.expect(']');
  in.finish();
  if (static_cast<int>(rend.size()) != n)
    invariant_at(n_at, "declared " + std::to_string(n) + " arcs, listed " + std::to_string(rend.size()));
  return checked(ArcTree(std::move(rend)));
}

BinaryTree parse_binary(std::string_view text) {
  Reader in(text);
  BinaryTree b = read_binary(in);
  in.finish();
  return b;
}

PlanarTree parse_planar(std::string_view text) {
  Reader in(text);
  PlanarTree p = read_planar(in);
  in.finish();
  return p;
}

AnyShape parse(Family family, std::string_view text) {
  switch (family) {
    case Family::Tree: return parse_tree(text);
    case Family::Tiling: return parse_tiling(text);
    case Family::Arcs: return parse_arcs(text);
    case Family::Binary: return parse_binary(text);
    case Family::Planar: return parse_planar(text);
  }
  throw std::invalid_argument("unknown family");
}

// ---------------------------------------------------------------------------
// Rendering.

namespace {

class Canvas {
 public:
  Canvas(int rows, int cols) : lines_(static_cast<std::size_t>(rows), std::string(cols, ' ')) {}

  void set(int r, int c, char ch) {
    if (r >= 0 && c >= 0 && r < static_cast<int>(lines_.size()) &&
        c < static_cast<int>(lines_[r].size()))
      lines_[r][c] = ch;
  }

  char at(int r, int c) const { return lines_[r][c]; }

  std::string str() const {
    std::string out;
    for (auto line : lines_) {
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line;
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<std::string> lines_;
};

std::string ascii_tiling(const StaircaseTiling& s) {
  const int n = s.n();
  if (n == 0) return "(empty tiling)\n";
  // owner[r][c] for 0 <= r, c <= n + 1; -1 outside the staircase.
  std::vector<std::vector<int>> owner(n + 2, std::vector<int>(n + 2, -1));
  for (std::size_t i = 0; i < s.rects().size(); ++i) {
    const Rect& r = s.rects()[i];
    for (int row = r.r1; row <= r.r2; ++row)
      for (int col = r.c1; col <= r.c2; ++col)
        if (row <= n && col <= n) owner[row][col] = static_cast<int>(i);
  }
  Canvas canvas(2 * n + 1, 4 * n + 1);
  for (int row = 1; row <= n + 1; ++row) {
    for (int col = 1; col <= n + 1; ++col) {
      // Top edge of cell (row, col).
      if (owner[row - 1][col] != owner[row][col])
        for (int k = 1; k <= 3; ++k) canvas.set(2 * (row - 1), 4 * (col - 1) + k, '-');
      // Left edge of cell (row, col).
      if (owner[row][col - 1] != owner[row][col]) canvas.set(2 * (row - 1) + 1, 4 * (col - 1), '|');
    }
  }
  for (int i = 0; i <= 2 * n; i += 2) {
    for (int j = 0; j <= 4 * n; j += 4) {
      const bool horizontal = (j > 0 && canvas.at(i, j - 1) == '-') || (j < 4 * n && canvas.at(i, j + 1) == '-');
      const bool vertical = (i > 0 && canvas.at(i - 1, j) == '|') || (i < 2 * n && canvas.at(i + 1, j) == '|');
      if (horizontal || vertical) canvas.set(i, j, '+');
    }
  }
  return canvas.str();
}

// Nesting level of each arc: 1 + the deepest arc strictly inside it.
std::vector<int> arc_levels(const ArcTree& a) {
  const int n = a.n();
  const auto& rend = a.rend();
  std::vector<int> level(n, 1);
  // Inner arcs start to the right, so sweep right to left.
  for (int p = n - 1; p >= 0; --p)
    for (int q = p + 1; q < rend[p]; ++q) level[p] = std::max(level[p], level[q] + 1);
  return level;
}

std::string ascii_arcs(const ArcTree& a) {
  const int n = a.n();
  if (n == 0) return "  o\n  0\n";
  const auto level = arc_levels(a);
  const int top = n ? *std::max_element(level.begin(), level.end()) : 0;
  // Point p sits at column 4p + 2; arcs leave at 4p + 3 and arrive at 4q + 1.
  Canvas canvas(top + 3, 4 * n + 4);
  std::vector<int> order(n);
  for (int p = 0; p < n; ++p) order[p] = p;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return level[x] > level[y]; });
  for (int p : order) {
    const int row = top - level[p];
    const int from = 4 * p + 3;
    const int to = 4 * a.rend()[p] + 1;
    canvas.set(row, from, '.');
    canvas.set(row, to, '.');
    for (int c = from + 1; c < to; ++c) canvas.set(row, c, '-');
    for (int r = row + 1; r <= top; ++r) {
      canvas.set(r, from, '|');
      canvas.set(r, to, '|');
    }
  }
  for (int p = 0; p <= n; ++p) {
    canvas.set(top + 1, 4 * p + 2, 'o');
    canvas.set(top + 2, 4 * p + 2, static_cast<char>('0' + p % 10));
  }
  return canvas.str();
}

void ascii_tree(const RightSweptTree& t, const std::string& tag, int depth, std::string& out) {
  out += std::string(2 * depth, ' ') + tag + "o\n";
  if (t.has_left()) ascii_tree(t.left_child(), "L: ", depth + 1, out);
  if (t.has_middle()) ascii_tree(t.middle_child(), "M: ", depth + 1, out);
  if (t.has_right()) ascii_tree(t.right_child(), "R: ", depth + 1, out);
}

void ascii_binary(const BinaryTree& b, const std::string& tag, int depth, std::string& out) {
  out += std::string(2 * depth, ' ') + tag + (b.is_leaf() ? "." : "o") + "\n";
  if (b.is_leaf()) return;
  ascii_binary(b.left(), "L: ", depth + 1, out);
  ascii_binary(b.right(), "R: ", depth + 1, out);
}

void ascii_planar(const PlanarTree& p, int depth, std::string& out) {
  out += std::string(2 * depth, ' ') + "o\n";
  for (const auto& c : p.children) ascii_planar(c, depth + 1, out);
}

// --- SVG -------------------------------------------------------------------

constexpr int kCell = 24;
constexpr int kMargin = 12;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

std::string svg_open(double width, double height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
}

std::string svg_tiling(const StaircaseTiling& s) {
  const int n = std::max(s.n(), 1);
  const double side = n * kCell + 2 * kMargin;
  std::string out = svg_open(side, side);
  for (const auto& r : s.rects()) {
    out += "  <rect x=\"" + num(kMargin + (r.c1 - 1) * kCell) + "\" y=\"" + num(kMargin + (r.r1 - 1) * kCell) +
           "\" width=\"" + num(r.width() * kCell) + "\" height=\"" + num(r.height() * kCell) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string svg_arcs(const ArcTree& a) {
  const int n = a.n();
  const auto level = arc_levels(a);
  const int top = n ? *std::max_element(level.begin(), level.end()) : 0;
  const double width = n * kCell * 2.0 + 2 * kMargin;
  const double height = (top + 1) * kCell + 2 * kMargin;
  const double base = height - kMargin;
  auto x_of = [](int p) { return kMargin + p * kCell * 2.0; };
  std::string out = svg_open(width, height);
  for (int p = 0; p < n; ++p) {
    const double x1 = x_of(p);
    const double x2 = x_of(a.rend()[p]);
    const double cx = (x1 + x2) / 2;
    const double rx = (x2 - x1) / 2;
    const double ry = level[p] * kCell * 0.9;
    std::string pts;
    constexpr int kSamples = 16;
    for (int k = 0; k <= kSamples; ++k) {
      const double theta = 3.14159265358979323846 * (1.0 - static_cast<double>(k) / kSamples);
      if (k) pts += ' ';
      pts += num(cx + rx * std::cos(theta)) + "," + num(base - ry * std::sin(theta));
    }
    out += "  <polyline points=\"" + pts + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (int p = 0; p <= n; ++p)
    out += "  <circle cx=\"" + num(x_of(p)) + "\" cy=\"" + num(base) + "\" r=\"4\" fill=\"black\"/>\n";
  out += "</svg>\n";
  return out;
}

// Generic tree layout: leaves take consecutive columns, parents sit over the
// mean of their children, nudged sideways for a lone left or right child.
struct LayoutNode {
  double x = 0;
  int depth = 0;
  int parent = -1;
};

std::string svg_layout(const std::vector<LayoutNode>& nodes) {
  double min_x = 0;
  double max_x = 0;
  int max_depth = 0;
  for (const auto& v : nodes) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    max_depth = std::max(max_depth, v.depth);
  }
  const double width = (max_x - min_x) * kCell + 2 * kMargin;
  const double height = max_depth * kCell * 1.5 + 2 * kMargin;
  auto px = [&](const LayoutNode& v) { return kMargin + (v.x - min_x) * kCell; };
  auto py = [&](const LayoutNode& v) { return kMargin + v.depth * kCell * 1.5; };
  std::string out = svg_open(width, height);
  for (const auto& v : nodes) {
    if (v.parent < 0) continue;
    const auto& u = nodes[v.parent];
    out += "  <polyline points=\"" + num(px(u)) + "," + num(py(u)) + " " + num(px(v)) + "," + num(py(v)) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const auto& v : nodes)
    out += "  <circle cx=\"" + num(px(v)) + "\" cy=\"" + num(py(v)) + "\" r=\"4\" fill=\"black\"/>\n";
  out += "</svg>\n";
  return out;
}

struct Layouter {
  std::vector<LayoutNode> nodes;
  double next_leaf = 0;

  int add(int parent, int depth) {
    nodes.push_back({0, depth, parent});
    return static_cast<int>(nodes.size()) - 1;
  }

  void finish(int id, const std::vector<int>& kids, double nudge) {
    if (kids.empty()) {
      nodes[id].x = next_leaf;
      next_leaf += 1;
      return;
    }
    double sum = 0;
    for (int k : kids) sum += nodes[k].x;
    nodes[id].x = sum / static_cast<double>(kids.size()) + nudge;
  }

  int lay(const RightSweptTree& t, int parent, int depth) {
    const int id = add(parent, depth);
    std::vector<int> kids;
    if (t.has_left()) kids.push_back(lay(t.left_child(), id, depth + 1));
    if (t.has_middle()) kids.push_back(lay(t.middle_child(), id, depth + 1));
    if (t.has_right()) kids.push_back(lay(t.right_child(), id, depth + 1));
    double nudge = 0;
    if (t.kind() == NodeKind::Left) nudge = 0.5;
    if (t.kind() == NodeKind::Right) nudge = -0.5;
    finish(id, kids, nudge);
    return id;
  }

  int lay(const BinaryTree& b, int parent, int depth) {
    const int id = add(parent, depth);
    std::vector<int> kids;
    if (!b.is_leaf()) {
      kids.push_back(lay(b.left(), id, depth + 1));
      kids.push_back(lay(b.right(), id, depth + 1));
    }
    finish(id, kids, 0);
    return id;
  }

  int lay(const PlanarTree& p, int parent, int depth) {
    const int id = add(parent, depth);
    std::vector<int> kids;
    for (const auto& c : p.children) kids.push_back(lay(c, id, depth + 1));
    finish(id, kids, 0);
    return id;
  }
};

template <class TreeT>
std::string svg_tree(const TreeT& t) {
  Layouter layouter;
  layouter.lay(t, -1, 0);
  return svg_layout(layouter.nodes);
}

}  // namespace

std::string render(const AnyShape& shape, RenderMode mode) {
  if (auto v = validate(shape); !v.empty()) throw InvalidShape(std::move(v));
  if (mode == RenderMode::Svg) {
    return std::visit(
        [](const auto& x) -> std::string {
          using Shape = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<Shape, StaircaseTiling>) return svg_tiling(x);
          else if constexpr (std::is_same_v<Shape, ArcTree>) return svg_arcs(x);
          else if constexpr (std::is_same_v<Shape, RightSweptTree>) {
            if (x.empty()) return svg_open(2 * kMargin, 2 * kMargin) + "</svg>\n";
            return svg_tree(x);
          } else return svg_tree(x);
        },
        shape);
  }
  return std::visit(
      [](const auto& x) -> std::string {
        using Shape = std::decay_t<decltype(x)>;
        std::string out;
        if constexpr (std::is_same_v<Shape, StaircaseTiling>) return ascii_tiling(x);
        else if constexpr (std::is_same_v<Shape, ArcTree>) return ascii_arcs(x);
        else if constexpr (std::is_same_v<Shape, RightSweptTree>) {
          if (x.empty()) return "(empty tree)\n";
          ascii_tree(x, "", 0, out);
        } else if constexpr (std::is_same_v<Shape, BinaryTree>) {
          ascii_binary(x, "", 0, out);
        } else {
          ascii_planar(x, 0, out);
        }
        return out;
      },
      shape);
}

}  // namespace catbij
