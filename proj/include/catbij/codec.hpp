#pragma once

// One-line text literals for every family and for construction terms.
//
//   term         E | m(t) | r(t) | l(t) | f(t2,t1)    Term::f(t1, t2) is written
//                                                     with t2 first
//   tree (T)     * | M(t) | R(t) | L(t) | B(t,t)      empty tree: ~
//   tiling (S)   S<n>[r1,c1,r2,c2;...]                empty: S0[]
//   arcs (A)     A<n>[rend0,rend1,...]                single point: A0[]
//   binary (B)   . | (b,b)
//   planar (P)   (child child ...)                    leaf: ()
//
// format() emits canonical text. parse() skips whitespace, accepts tiling
// rectangles in any order, and validates: malformed text raises SyntaxError,
// invariant violations raise InvariantError.

#include <string>
#include <string_view>

#include "catbij/model.hpp"
#include "catbij/terms.hpp"

namespace catbij {

std::string format(const Term& t);
std::string format(const RightSweptTree& t);
std::string format(const StaircaseTiling& s);
std::string format(const ArcTree& a);
std::string format(const BinaryTree& b);
std::string format(const PlanarTree& p);
std::string format(const AnyShape& shape);

Term parse_term(std::string_view text);
RightSweptTree parse_tree(std::string_view text);
StaircaseTiling parse_tiling(std::string_view text);
ArcTree parse_arcs(std::string_view text);
BinaryTree parse_binary(std::string_view text);
PlanarTree parse_planar(std::string_view text);
AnyShape parse(Family family, std::string_view text);

enum class RenderMode { Ascii, Svg };

// ASCII: tilings as a cell grid with +-| borders, trees as indented slot
// lists, arc trees as an arc diagram over a row of points. SVG: a minimal
// standalone document whose bytes depend only on the input.
std::string render(const AnyShape& shape, RenderMode mode);

}  // namespace catbij
