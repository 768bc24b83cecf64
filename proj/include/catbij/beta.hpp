#pragma once

// The relative bijection between right-swept trees and staircase tilings.
//
// A root with only a right child becomes a full-height first column, a root
// with only a middle child a full-width first row. A root with a left child
// starts a left spine v_m (root), v_{m-1}, ..., v_1 (deepest); the spine maps
// to the chain of rectangles along the top row, v_1 leftmost, and v_i's
// rectangle is (size of v_i's right subtree + 1) columns wide. Each right
// subtree of a spine node is mapped recursively into the sub-staircase below
// its spine rectangle.

#include <cstdint>
#include <string>
#include <vector>

#include "catbij/model.hpp"

namespace catbij {

StaircaseTiling beta(const RightSweptTree& t);
RightSweptTree beta_inv(const StaircaseTiling& s);

// Node path ("" for the root, then one of L/M/R per step) and the rectangle
// beta assigns to that node.
struct NodeRect {
  std::string path;
  Rect rect;
};

// Node-to-rectangle correspondence induced by beta, in preorder.
std::vector<NodeRect> beta_correspondence(const RightSweptTree& t);

// Which local placement rule a report entry concerns.
enum class BetaRule : std::uint8_t {
  LeftChild = 1,     // parent immediately right of its left child
  LoneRightChild,    // lone right child immediately right of its parent
  RightOffLeft,      // right child spawned next to a left child: immediately below
  MiddleChild,       // middle child immediately below
  RightWithLeft,     // right child with a left chain: the chain sits in between
  Correspondence,    // the tiling is not the image of the tree
};

struct RuleViolation {
  BetaRule rule;
  std::string parent;
  std::string child;
  std::string message;
};

// Checks every applicable local rule on the correspondence of `t`, and that
// `s` is its image. Empty means all rules hold.
std::vector<RuleViolation> check_beta_rules(const RightSweptTree& t, const StaircaseTiling& s);

// `a` is immediately to the left of `b`: a.c2 + 1 == b.c1, same top row, and
// a shared vertical edge of positive length.
bool immediately_right_of(const Rect& b, const Rect& a);
// `b` is immediately below `a`: a.r2 + 1 == b.r1 and a shared horizontal edge
// of positive length.
bool immediately_below(const Rect& b, const Rect& a);

}  // namespace catbij
