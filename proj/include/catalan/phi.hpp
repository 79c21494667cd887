#pragma once

#include <cstddef>
#include <vector>

#include "catalan/plane_tree.hpp"

namespace catalan {

enum class IllegalCase {
  LeafNonFirstChild,   // surgery moves the left siblings under the vertex
  InternalFirstChild,  // surgery moves the vertex's children out as its left siblings
};

struct IllegalVertexReport {
  VertexRef vertex;
  IllegalCase case_tag = IllegalCase::LeafNonFirstChild;
  VertexRef parent;
  friend bool operator==(const IllegalVertexReport&, const IllegalVertexReport&) = default;
};

// First illegal vertex under the right-to-left search. At a vertex with children
// v_1..v_k the subtrees T_k, ..., T_2 are scanned in that order: a leaf v_i is returned,
// an internal v_i is searched recursively. If nothing is found there, v_1 is returned
// when it is internal; a leaf v_1 ends the scan of this vertex.
// Throws DomainError for legal trees and the single-vertex tree.
IllegalVertexReport find_first_illegal(const PlaneTree& t);

// Parity-reversing involution on trees that are not legal. Throws DomainError otherwise.
PlaneTree phi(const PlaneTree& t);

struct TrackedImage {
  PlaneTree image;
  std::vector<std::size_t> moved_to;  // moved_to[old preorder index] = new preorder index
};

// phi together with where every vertex of the input ends up.
TrackedImage phi_tracked(const PlaneTree& t);

}  // namespace catalan
