#pragma once

// Classical bijections to binary and planar trees.
//
// tiling -> binary: the rectangle R0 at the top-left corner, with bottom-right
// corner (h, n+1-h), becomes the root; the staircase of size h-1 to its right
// is the left subtree and the staircase of size n-h below it is the right
// subtree.
//
// arcs -> planar: point n is the root and the parent of point p is rend[p];
// children are ordered by increasing point index.

#include "catbij/model.hpp"

namespace catbij {

BinaryTree tiling_to_binary(const StaircaseTiling& s);
StaircaseTiling binary_to_tiling(const BinaryTree& b);

PlanarTree arcs_to_planar(const ArcTree& a);
ArcTree planar_to_arcs(const PlanarTree& p);

// Composite correspondence between any two families. Binary trees are
// reached through tilings and planar trees through arc trees; the T/S/A legs
// go through alpha, so induced(B, P, x) pairs a binary tree with a planar tree.
AnyShape induced(Family from, Family to, const AnyShape& shape);

}  // namespace catbij
