#include "catbij/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "catbij/alpha.hpp"
#include "catbij/beta.hpp"
#include "catbij/classical.hpp"
#include "catbij/codec.hpp"

namespace catbij {

// ---------------------------------------------------------------------------
// Catalan numbers.

namespace {

void check_index(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  if (n > kMaxCatalanIndex)
    throw std::overflow_error("catalan: c_" + std::to_string(n) + " is out of range (n <= " +
                              std::to_string(kMaxCatalanIndex) + ")");
}

}  // namespace

std::uint64_t catalan(int n) {
  check_index(n);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 0; m < n; ++m) {
    std::uint64_t sum = 0;
    for (int k = 0; k <= m; ++k) {
      std::uint64_t term = 0;
      if (__builtin_mul_overflow(c[k], c[m - k], &term) || __builtin_add_overflow(sum, term, &sum))
        throw std::overflow_error("catalan: overflow at c_" + std::to_string(m + 1));
    }
    c[m + 1] = sum;
  }
  return c[n];
}

std::uint64_t catalan_closed_form(int n) {
  check_index(n);
  // binom(2n, n) built incrementally stays integral at every step.
  unsigned __int128 binom = 1;
  for (int i = 0; i < n; ++i) binom = binom * static_cast<unsigned>(2 * n - i) / static_cast<unsigned>(i + 1);
  return static_cast<std::uint64_t>(binom / static_cast<unsigned>(n + 1));
}

// ---------------------------------------------------------------------------
// Oracles.

namespace {

// Every slot-labelled unary-binary tree with n nodes, restrictions ignored.
std::vector<RightSweptTree> all_labelled_trees(int n) {
  std::vector<std::vector<RightSweptTree>> by_size(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    auto& out = by_size[k];
    if (k == 1) out.push_back(RightSweptTree::leaf());
    for (const auto& c : by_size[k - 1]) {
      out.push_back(RightSweptTree::mid(c));
      out.push_back(RightSweptTree::right(c));
      out.push_back(RightSweptTree::left(c));
    }
    for (int a = 1; a + 1 < k; ++a)
      for (const auto& l : by_size[a])
        for (const auto& r : by_size[k - 1 - a]) out.push_back(RightSweptTree::left_right(l, r));
  }
  return n == 0 ? std::vector<RightSweptTree>{RightSweptTree{}} : by_size[n];
}

struct Grid {
  int n;
  std::vector<char> used;
  explicit Grid(int size) : n(size), used(static_cast<std::size_t>(size) * size, 0) {}
  char& at(int r, int c) { return used[static_cast<std::size_t>(r - 1) * n + (c - 1)]; }
  bool inside(int r, int c) const { return r >= 1 && c >= 1 && r + c <= n + 1; }
  bool free_rect(int r1, int c1, int r2, int c2) {
    for (int r = r1; r <= r2; ++r)
      for (int c = c1; c <= c2; ++c)
        if (!inside(r, c) || at(r, c)) return false;
    return true;
  }
  void fill(int r1, int c1, int r2, int c2, char v) {
    for (int r = r1; r <= r2; ++r)
      for (int c = c1; c <= c2; ++c) at(r, c) = v;
  }
  bool full() {
    for (int r = 1; r <= n; ++r)
      for (int c = 1; r + c <= n + 1; ++c)
        if (!at(r, c)) return false;
    return true;
  }
};

void diagonal_search(int k, Grid& grid, std::vector<Rect>& rects, std::set<StaircaseTiling>& out) {
  const int n = grid.n;
  if (k > n) {
    if (grid.full()) {
      StaircaseTiling s(n, rects);
      if (is_valid(s)) out.insert(std::move(s));
    }
    return;
  }
  const int r2 = k;
  const int c2 = n + 1 - k;
  for (int r1 = 1; r1 <= r2; ++r1) {
    for (int c1 = 1; c1 <= c2; ++c1) {
      if (!grid.free_rect(r1, c1, r2, c2)) continue;
      grid.fill(r1, c1, r2, c2, 1);
      rects.push_back({r1, c1, r2, c2});
      diagonal_search(k + 1, grid, rects, out);
      rects.pop_back();
      grid.fill(r1, c1, r2, c2, 0);
    }
  }
}

void cover_search(Grid& grid, int count, std::vector<Rect>& rects, std::set<StaircaseTiling>& out) {
  const int n = grid.n;
  int r0 = 0;
  int c0 = 0;
  for (int r = 1; r <= n && !r0; ++r)
    for (int c = 1; r + c <= n + 1; ++c)
      if (!grid.at(r, c)) {
        r0 = r;
        c0 = c;
        break;
      }
  if (!r0) {
    if (static_cast<int>(rects.size()) == count) out.insert(StaircaseTiling(n, rects));
    return;
  }
  if (static_cast<int>(rects.size()) == count) return;
  for (int r2 = r0; grid.inside(r2, c0) && !grid.at(r2, c0); ++r2) {
    for (int c2 = c0; grid.free_rect(r0, c0, r2, c2); ++c2) {
      grid.fill(r0, c0, r2, c2, 1);
      rects.push_back({r0, c0, r2, c2});
      cover_search(grid, count, rects, out);
      rects.pop_back();
      grid.fill(r0, c0, r2, c2, 0);
    }
  }
}

void arc_sequences(int p, std::vector<int>& rend, std::set<ArcTree>& out) {
  const int n = static_cast<int>(rend.size());
  if (p == n) {
    ArcTree a(rend);
    if (is_valid(a)) out.insert(std::move(a));
    return;
  }
  for (int q = p + 1; q <= n; ++q) {
    rend[p] = q;
    arc_sequences(p + 1, rend, out);
  }
}

}  // namespace

std::set<RightSweptTree> brute_force_trees(int n) {
  std::set<RightSweptTree> out;
  for (auto& t : all_labelled_trees(n))
    if (is_valid(t)) out.insert(std::move(t));
  return out;
}

std::set<StaircaseTiling> brute_force_tilings(int n) {
  std::set<StaircaseTiling> out;
  Grid grid(n);
  std::vector<Rect> rects;
  diagonal_search(1, grid, rects, out);
  return out;
}

std::set<ArcTree> brute_force_arcs(int n) {
  std::set<ArcTree> out;
  std::vector<int> rend(static_cast<std::size_t>(n), 0);
  arc_sequences(0, rend, out);
  return out;
}

std::set<StaircaseTiling> rectangulations(int n, int count) {
  std::set<StaircaseTiling> out;
  Grid grid(n);
  std::vector<Rect> rects;
  cover_search(grid, count, rects, out);
  return out;
}

// ---------------------------------------------------------------------------
// Random terms.

Term random_enumerated_term(int n, std::mt19937_64& rng) {
  const auto& terms = enum_terms(n);
  std::uniform_int_distribution<std::size_t> pick(0, terms.size() - 1);
  return terms[pick(rng)];
}

namespace {

Term random_non_m(int n, std::mt19937_64& rng);

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Term random_fork(int n, std::mt19937_64& rng) {
  const int n1 = uniform(rng, 2, n - 2);
  Term t1 = random_non_m(n1, rng);
  return Term::f(std::move(t1), random_term(n - 1 - n1, rng));
}

// n >= 2.
Term random_non_m(int n, std::mt19937_64& rng) {
  const int choices = n >= 4 ? 3 : (n >= 3 ? 2 : 1);
  switch (uniform(rng, 0, choices - 1)) {
    case 0: return Term::r(random_term(n - 1, rng));
    case 1: return Term::l(random_non_m(n - 1, rng));
    default: return random_fork(n, rng);
  }
}

}  // namespace

Term random_term(int n, std::mt19937_64& rng) {
  if (n == 0) return Term{};
  if (n == 1 || uniform(rng, 0, 3) == 0) return Term::m(random_term(n - 1, rng));
  return random_non_m(n, rng);
}

// ---------------------------------------------------------------------------
// The suite.

namespace {

template <ConstructibleShape Shape>
std::vector<Shape> evaluated(int n) {
  const auto& terms = enum_terms(n);
  std::vector<Shape> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(eval<Shape>(t));
  return out;
}

template <class Shape>
std::string code_of() {
  if constexpr (std::is_same_v<Shape, RightSweptTree>) return "T";
  else if constexpr (std::is_same_v<Shape, StaircaseTiling>) return "S";
  else if constexpr (std::is_same_v<Shape, ArcTree>) return "A";
  else if constexpr (std::is_same_v<Shape, BinaryTree>) return "B";
  else return "P";
}

// Calls f.template operator()<Shape>() for T, S, A.
template <class F>
void for_each_family(F&& f) {
  f.template operator()<RightSweptTree>();
  f.template operator()<StaircaseTiling>();
  f.template operator()<ArcTree>();
}

CheckResult result(std::string name, int n, bool pass, std::string detail) {
  return {std::move(name), n, pass, std::move(detail)};
}

// Wraps a check so an unexpected exception becomes a failure entry.
using Check = std::function<CheckResult()>;

Check guarded(std::string name, int n, std::function<CheckResult()> body) {
  return [name = std::move(name), n, body = std::move(body)]() {
    try {
      return body();
    } catch (const std::exception& e) {
      return result(name, n, false, std::string("exception: ") + e.what());
    }
  };
}

template <ConstructibleShape Shape>
CheckResult check_count(int n) {
  const auto shapes = evaluated<Shape>(n);
  std::size_t invalid = 0;
  for (const auto& s : shapes)
    if (!is_valid(s) || size(s) != n) ++invalid;
  const std::set<Shape> distinct(shapes.begin(), shapes.end());
  const std::uint64_t want = catalan(n);
  const bool pass = invalid == 0 && distinct.size() == want;
  return result("count_" + code_of<Shape>(), n, pass,
                std::to_string(distinct.size()) + " distinct valid, c_n=" + std::to_string(want) +
                    (invalid ? ", " + std::to_string(invalid) + " invalid" : ""));
}

CheckResult check_class_counts(int n) {
  // Terms of size n + 1 split by their outermost constructor.
  std::uint64_t by_kind[5] = {0, 0, 0, 0, 0};
  for (const auto& t : enum_terms(n + 1)) ++by_kind[static_cast<int>(t.kind())];
  const std::uint64_t cn = catalan(n);
  const std::uint64_t cn1 = catalan(n + 1);
  const std::uint64_t want_m = cn;
  const std::uint64_t want_r = n >= 1 ? cn : 0;
  const std::uint64_t want_l = n >= 1 ? cn - catalan(n - 1) : 0;
  std::uint64_t want_f = 0;
  for (int k = 2; k <= n - 1; ++k) want_f += catalan(n - k) * (catalan(k) - catalan(k - 1));
  bool pass = by_kind[1] == want_m && by_kind[2] == want_r && by_kind[3] == want_l && by_kind[4] == want_f &&
              want_m + want_r + want_l + want_f == cn1;
  std::string eq3 = "n/a";
  if (n >= 1) {
    std::uint64_t lhs = 0;
    for (int k = 1; k <= n - 1; ++k) lhs += catalan(k) * catalan(n - k);
    const bool ok = lhs == cn1 - 2 * cn;
    pass = pass && ok;
    eq3 = ok ? "holds" : "fails";
  }
  std::ostringstream detail;
  detail << "size " << n + 1 << ": m=" << by_kind[1] << " r=" << by_kind[2] << " l=" << by_kind[3]
         << " f=" << by_kind[4] << " (want " << want_m << "," << want_r << "," << want_l << "," << want_f
         << "), sum-of-products identity " << eq3;
  return result("class_counts", n + 1, pass, detail.str());
}

template <ConstructibleShape Shape>
CheckResult check_oracle(int n) {
  const auto shapes = evaluated<Shape>(n);
  const std::set<Shape> built(shapes.begin(), shapes.end());
  std::set<Shape> oracle;
  if constexpr (std::is_same_v<Shape, RightSweptTree>) oracle = brute_force_trees(n);
  else if constexpr (std::is_same_v<Shape, StaircaseTiling>) oracle = brute_force_tilings(n);
  else oracle = brute_force_arcs(n);
  return result("oracle_" + code_of<Shape>(), n, built == oracle,
                "constructed " + std::to_string(built.size()) + ", brute force " + std::to_string(oracle.size()));
}

template <ConstructibleShape X, ConstructibleShape Y>
CheckResult check_alpha_pair(int n) {
  const auto xs = evaluated<X>(n);
  const auto ys = evaluated<Y>(n);
  const std::set<Y> targets(ys.begin(), ys.end());
  std::set<Y> image;
  std::size_t bad_inverse = 0;
  for (const auto& x : xs) {
    Y y = alpha<Y>(x);
    if (alpha<X>(y) != x) ++bad_inverse;
    image.insert(std::move(y));
  }
  const bool pass = bad_inverse == 0 && image.size() == xs.size() && image == targets;
  return result("alpha_" + code_of<X>() + code_of<Y>(), n, pass,
                std::to_string(image.size()) + " distinct images, " + std::to_string(bad_inverse) +
                    " inverse failures");
}

template <ConstructibleShape X, ConstructibleShape Y, ConstructibleShape Z>
std::size_t functorial_failures(const std::vector<X>& xs) {
  std::size_t bad = 0;
  for (const auto& x : xs)
    if (alpha<Z>(x) != alpha<Z>(alpha<Y>(x))) ++bad;
  return bad;
}

CheckResult check_alpha_functorial(int n) {
  std::size_t bad = 0;
  std::size_t triples = 0;
  for_each_family([&]<class X>() {
    const auto xs = evaluated<X>(n);
    for_each_family([&]<class Y>() {
      for_each_family([&]<class Z>() {
        bad += functorial_failures<X, Y, Z>(xs);
        ++triples;
      });
    });
  });
  return result("alpha_functorial", n, bad == 0,
                std::to_string(triples) + " triples, " + std::to_string(bad) + " failures");
}

template <ConstructibleShape X, ConstructibleShape Y>
std::size_t commute_failures(int n) {
  std::size_t bad = 0;
  auto compare = [&](Op op, const X& in) {
    const X out = step(op, in);
    if (alpha<Y>(out) != step(op, alpha<Y>(in))) ++bad;
  };
  if (n >= 1)
    for (const auto& x : evaluated<X>(n - 1)) {
      compare(Op::M, x);
      if (n - 1 >= 1) compare(Op::R, x);
      if (n - 1 >= 2 && top_op(x) != Op::M) compare(Op::L, x);
    }
  for (int n1 = 2; n1 <= n - 2; ++n1) {
    const auto firsts = evaluated<X>(n1);
    const auto seconds = evaluated<X>(n - 1 - n1);
    for (const auto& a : firsts) {
      if (top_op(a) == Op::M) continue;
      const auto image_a = alpha<Y>(a);
      for (const auto& b : seconds)
        if (alpha<Y>(step(Op::F, a, b)) != step(Op::F, image_a, alpha<Y>(b))) ++bad;
    }
  }
  return bad;
}

CheckResult check_alpha_commutes(int n) {
  std::size_t bad = 0;
  for_each_family([&]<class X>() { for_each_family([&]<class Y>() { bad += commute_failures<X, Y>(n); }); });
  return result("alpha_commutes_with_step", n, bad == 0, std::to_string(bad) + " failures over 9 pairs");
}

CheckResult check_alpha_random(int n, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  for (int i = 0; i < samples; ++i) {
    const Term term = random_enumerated_term(n, rng);
    for_each_family([&]<class X>() {
      const X x = eval<X>(term);
      if (term_of(x) != term) ++bad;
      for_each_family([&]<class Y>() {
        const Y y = alpha<Y>(x);
        if (!is_valid(y) || alpha<X>(y) != x) ++bad;
        // Commutation with the outermost constructor.
        const auto d = decompose(x);
        const Y rebuilt = d.op == Op::F ? step(Op::F, alpha<Y>(d.first), alpha<Y>(d.second))
                                        : step(d.op, alpha<Y>(d.first));
        if (rebuilt != y) ++bad;
        for_each_family([&]<class Z>() {
          if (alpha<Z>(y) != alpha<Z>(x)) ++bad;
        });
      });
    });
  }
  return result("alpha_random", n, bad == 0,
                std::to_string(samples) + " random terms, " + std::to_string(bad) + " failures");
}

CheckResult check_beta_inverse(int n) {
  const auto trees = evaluated<RightSweptTree>(n);
  const auto tilings = evaluated<StaircaseTiling>(n);
  std::set<StaircaseTiling> image;
  std::size_t bad = 0;
  for (const auto& t : trees) {
    StaircaseTiling s = beta(t);
    if (!is_valid(s) || beta_inv(s) != t) ++bad;
    image.insert(std::move(s));
  }
  std::size_t bad_inv = 0;
  for (const auto& s : tilings) {
    const RightSweptTree t = beta_inv(s);
    if (!is_valid(t) || beta(t) != s) ++bad_inv;
  }
  const std::set<StaircaseTiling> all(tilings.begin(), tilings.end());
  const bool pass = bad == 0 && bad_inv == 0 && image == all;
  return result("beta_inverse", n, pass,
                std::to_string(image.size()) + " distinct images, " + std::to_string(bad) + " tree-side and " +
                    std::to_string(bad_inv) + " tiling-side failures");
}

CheckResult check_beta_rules_at(int n) {
  std::size_t bad = 0;
  std::string first;
  for (const auto& t : evaluated<RightSweptTree>(n)) {
    const auto report = check_beta_rules(t, beta(t));
    if (!report.empty()) {
      ++bad;
      if (first.empty()) first = " (first: " + format(t) + ": " + report.front().message + ")";
    }
  }
  return result("beta_rules", n, bad == 0, std::to_string(bad) + " trees with rule violations" + first);
}

CheckResult check_alpha_vs_beta(int n) {
  const auto trees = evaluated<RightSweptTree>(n);
  std::vector<RightSweptTree> differ;
  for (const auto& t : trees)
    if (alpha<StaircaseTiling>(t) != beta(t)) differ.push_back(t);
  if (n <= 2)
    return result("alpha_equals_beta", n, differ.empty(), std::to_string(differ.size()) + " trees differ");
  bool swapped = differ.size() == 2 && alpha<StaircaseTiling>(differ[0]) == beta(differ[1]) &&
                 alpha<StaircaseTiling>(differ[1]) == beta(differ[0]);
  const std::size_t equal = trees.size() - differ.size();
  return result("alpha_vs_beta", n, n != 3 || (equal == 3 && swapped),
                std::to_string(equal) + " equal, " + std::to_string(differ.size()) +
                    (swapped ? " swapped" : " differ"));
}

CheckResult check_worked_example() {
  const std::string text = "f(m(l(r(m(m(E))))),r(f(m(E),r(r(m(E))))))";
  const Term term = parse_term(text);
  const auto tiling = eval<StaircaseTiling>(term);
  const bool tiling_ok = is_valid(tiling) && tiling.n() == 12 && format(term_of(tiling)) == text;
  const auto tree = alpha<RightSweptTree>(tiling);
  const auto arcs = alpha<ArcTree>(tiling);
  const bool images_ok = tree.size() == 12 && arcs.n() == 12 && term_of(tree) == term && term_of(arcs) == term;
  return result("worked_example", 12, tiling_ok && images_ok,
                format(tiling) + " ; " + format(tree) + " ; " + format(arcs));
}

std::vector<BinaryTree> all_binary_trees(int n) {
  std::vector<std::vector<BinaryTree>> by(static_cast<std::size_t>(n) + 1);
  by[0].emplace_back();
  for (int k = 1; k <= n; ++k)
    for (int a = 0; a < k; ++a)
      for (const auto& l : by[a])
        for (const auto& r : by[k - 1 - a]) by[k].push_back(BinaryTree::node(l, r));
  return by[n];
}

// Planar trees with n edges: a root whose first child subtree has a edges,
// followed by the rest of the root's children using n - 1 - a edges.
std::vector<PlanarTree> all_planar_trees(int n) {
  std::vector<std::vector<PlanarTree>> by(static_cast<std::size_t>(n) + 1);
  by[0].emplace_back();
  for (int k = 1; k <= n; ++k)
    for (int a = 0; a < k; ++a)
      for (const auto& first : by[a])
        for (const auto& rest : by[k - 1 - a]) {
          PlanarTree t;
          t.children.reserve(rest.children.size() + 1);
          t.children.push_back(first);
          t.children.insert(t.children.end(), rest.children.begin(), rest.children.end());
          by[k].push_back(std::move(t));
        }
  return by[n];
}

CheckResult check_tiling_binary(int n) {
  const auto tilings = evaluated<StaircaseTiling>(n);
  std::set<BinaryTree> image;
  std::size_t bad = 0;
  for (const auto& s : tilings) {
    BinaryTree b = tiling_to_binary(s);
    if (b.size() != n || binary_to_tiling(b) != s) ++bad;
    image.insert(std::move(b));
  }
  const auto binaries = all_binary_trees(n);
  const std::set<BinaryTree> all(binaries.begin(), binaries.end());
  return result("classical_tiling_binary", n, bad == 0 && image == all && all.size() == tilings.size(),
                std::to_string(image.size()) + " images of " + std::to_string(all.size()) + " binary trees, " +
                    std::to_string(bad) + " round-trip failures");
}

CheckResult check_arcs_planar(int n) {
  const auto arcs = evaluated<ArcTree>(n);
  std::set<PlanarTree> image;
  std::size_t bad = 0;
  for (const auto& a : arcs) {
    PlanarTree p = arcs_to_planar(a);
    if (p.size() != n || planar_to_arcs(p) != a) ++bad;
    image.insert(std::move(p));
  }
  const auto planars = all_planar_trees(n);
  const std::set<PlanarTree> all(planars.begin(), planars.end());
  return result("classical_arcs_planar", n, bad == 0 && image == all && all.size() == arcs.size(),
                std::to_string(image.size()) + " images of " + std::to_string(all.size()) + " planar trees, " +
                    std::to_string(bad) + " round-trip failures");
}

CheckResult check_induced(int n) {
  const auto binaries = all_binary_trees(n);
  const auto planars = all_planar_trees(n);
  const std::set<PlanarTree> all(planars.begin(), planars.end());
  std::set<PlanarTree> image;
  std::size_t bad = 0;
  for (const auto& b : binaries) {
    const auto p = std::get<PlanarTree>(induced(Family::Binary, Family::Planar, b));
    if (p.size() != n || std::get<BinaryTree>(induced(Family::Planar, Family::Binary, p)) != b) ++bad;
    image.insert(p);
  }
  return result("induced_binary_planar", n, bad == 0 && image == all,
                std::to_string(image.size()) + " images of " + std::to_string(all.size()) + ", " +
                    std::to_string(bad) + " inverse failures");
}

CheckResult check_codec(int n) {
  std::size_t bad = 0;
  std::size_t total = 0;
  for (const auto& t : enum_terms(n)) {
    ++total;
    if (parse_term(format(t)) != t) ++bad;
  }
  for_each_family([&]<class X>() {
    for (const auto& x : evaluated<X>(n)) {
      ++total;
      const AnyShape any = x;
      if (parse(family_of(any), format(x)) != any) ++bad;
    }
  });
  for (const auto& b : all_binary_trees(n)) {
    ++total;
    if (parse_binary(format(b)) != b) ++bad;
  }
  for (const auto& p : all_planar_trees(n)) {
    ++total;
    if (parse_planar(format(p)) != p) ++bad;
  }
  return result("codec_roundtrip", n, bad == 0,
                std::to_string(total) + " literals, " + std::to_string(bad) + " failures");
}

CheckResult check_codec_fuzz(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  for (int i = 0; i < samples; ++i) {
    const Term t = random_term(std::uniform_int_distribution<int>(0, 24)(rng), rng);
    if (parse_term(format(t)) != t) ++bad;
  }
  return result("codec_fuzz", 24, bad == 0,
                std::to_string(samples) + " random terms of size <= 24, " + std::to_string(bad) + " failures");
}

CheckResult check_diagonal_equivalence(int n) {
  const auto rects = rectangulations(n, n);
  const auto diagonal = brute_force_tilings(n);
  const auto built = evaluated<StaircaseTiling>(n);
  const std::set<StaircaseTiling> constructed(built.begin(), built.end());
  return result("diagonal_equivalence", n, rects == diagonal && diagonal == constructed,
                std::to_string(rects.size()) + " n-rectangle tilings, " + std::to_string(diagonal.size()) +
                    " diagonal tilings");
}

CheckResult check_catalan(int max_n) {
  std::size_t bad = 0;
  for (int n = 0; n <= kMaxCatalanIndex; ++n)
    if (catalan(n) != catalan_closed_form(n)) ++bad;
  bool refused = false;
  try {
    catalan(kMaxCatalanIndex + 1);
  } catch (const std::overflow_error&) {
    refused = true;
  }
  return result("catalan", max_n, bad == 0 && refused,
                "recursion vs closed form for n <= " + std::to_string(kMaxCatalanIndex) + ": " +
                    std::to_string(bad) + " mismatches; c_12=" + std::to_string(catalan(12)));
}

}  // namespace

std::vector<CheckResult> run_suite(const SuiteOptions& options) {
  const int max_n = std::max(0, options.max_n);
  const int oracle_n = std::clamp(options.oracle_n, 0, std::min(max_n, 8));
  const int alpha_n = std::min(max_n, 10);
  const int rules_n = std::min(max_n, 8);
  const int rect_n = std::min(max_n, 6);
  const int induced_n = std::min(max_n, 10);
  const int codec_n = std::min(max_n, 10);

  std::vector<Check> checks;
  auto add = [&](std::string name, int n, std::function<CheckResult()> body) {
    checks.push_back(guarded(std::move(name), n, std::move(body)));
  };

  add("catalan", max_n, [=] { return check_catalan(max_n); });
  for (int n = 0; n <= max_n; ++n)
    for_each_family([&]<class X>() { add("count_" + code_of<X>(), n, [n] { return check_count<X>(n); }); });
  for (int n = 0; n <= max_n; ++n) add("class_counts", n + 1, [n] { return check_class_counts(n); });
  for (int n = 0; n <= oracle_n; ++n)
    for_each_family([&]<class X>() { add("oracle_" + code_of<X>(), n, [n] { return check_oracle<X>(n); }); });
  for (int n = 0; n <= alpha_n; ++n) {
    for_each_family([&]<class X>() {
      for_each_family([&]<class Y>() {
        add("alpha_" + code_of<X>() + code_of<Y>(), n, [n] { return check_alpha_pair<X, Y>(n); });
      });
    });
    add("alpha_functorial", n, [n] { return check_alpha_functorial(n); });
    add("alpha_commutes_with_step", n, [n] { return check_alpha_commutes(n); });
  }
  if (max_n >= 12) add("alpha_random", 12, [seed = options.seed] { return check_alpha_random(12, 1000, seed); });
  for (int n = 0; n <= max_n; ++n) add("beta_inverse", n, [n] { return check_beta_inverse(n); });
  for (int n = 0; n <= rules_n; ++n) add("beta_rules", n, [n] { return check_beta_rules_at(n); });
  for (int n = 0; n <= std::min(max_n, 3); ++n)
    add(n <= 2 ? "alpha_equals_beta" : "alpha_vs_beta", n, [n] { return check_alpha_vs_beta(n); });
  add("worked_example", 12, [] { return check_worked_example(); });
  for (int n = 0; n <= max_n; ++n) {
    add("classical_tiling_binary", n, [n] { return check_tiling_binary(n); });
    add("classical_arcs_planar", n, [n] { return check_arcs_planar(n); });
  }
  for (int n = 0; n <= induced_n; ++n) add("induced_binary_planar", n, [n] { return check_induced(n); });
  for (int n = 0; n <= codec_n; ++n) add("codec_roundtrip", n, [n] { return check_codec(n); });
  add("codec_fuzz", 24, [seed = options.seed] { return check_codec_fuzz(10000, seed + 1); });
  for (int n = 0; n <= rect_n; ++n) add("diagonal_equivalence", n, [n] { return check_diagonal_equivalence(n); });

  std::vector<CheckResult> results(checks.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < checks.size(); ++i) results[i] = checks[i]();
    return results;
  }
  // Warm the term cache up front so workers only read it.
  enum_terms(max_n + 1);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < checks.size(); i = next++) results[i] = checks[i]();
    });
  for (auto& w : workers) w.join();
  return results;
}

std::string format_check_lines(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results)
    out += "CHECK " + r.name + " n=" + std::to_string(r.n) + (r.pass ? " PASS " : " FAIL ") + r.detail + "\n";
  return out;
}

std::string format_report_table(const std::vector<CheckResult>& results) {
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(3) << "n"
      << "  result  detail\n";
  out << std::string(width + 24, '-') << "\n";
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failed;
    out << std::left << std::setw(static_cast<int>(width)) << r.name << "  " << std::setw(3) << r.n << "  "
        << (r.pass ? "PASS  " : "FAIL  ") << "  " << r.detail << "\n";
  }
  out << std::string(width + 24, '-') << "\n";
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return out.str();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace catbij
