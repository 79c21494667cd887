#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catalan/lattice_words.hpp"

namespace catalan {

// Preorder position of a vertex: root 0, then child subtrees left to right.
struct VertexRef {
  std::size_t index = 0;
  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

enum class Parity { Even, Odd };

struct TreeStats {
  std::size_t leaves = 0;
  std::size_t even_level = 0;  // root sits at depth 0
  Parity parity = Parity::Even;
  int sign = 1;  // (-1)^leaves
  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

// Unlabelled ordered rooted tree. The value is its balanced-parentheses encoding with
// the root implicit: each '(' opens a child subtree and ')' closes it. Ordering and
// equality follow the encoding with '(' < ')'.
class PlaneTree {
 public:
  // Single vertex.
  PlaneTree() = default;
  explicit PlaneTree(const std::vector<PlaneTree>& children);

  std::size_t edge_count() const { return encoding_.size() / 2; }
  std::size_t vertex_count() const { return edge_count() + 1; }
  const std::string& encoding() const { return encoding_; }

  // Child subtrees of the root, in order.
  std::vector<PlaneTree> children() const;

  friend bool operator==(const PlaneTree&, const PlaneTree&) = default;
  friend auto operator<=>(const PlaneTree&, const PlaneTree&) = default;

  // No validation; for encodings produced by this library or already checked.
  static PlaneTree from_trusted_encoding(std::string encoding);

 private:
  std::string encoding_;
};

PlaneTree parse_tree(std::string_view text);
std::string render_tree(const PlaneTree& t);

// Preorder adjacency view of a tree.
struct TreeLayout {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<std::size_t> parent;  // parent[0] == npos
  std::vector<std::size_t> depth;
  std::vector<std::vector<std::size_t>> children;

  static TreeLayout of(const PlaneTree& t);

  std::size_t size() const { return parent.size(); }
  bool is_leaf(std::size_t v) const { return children[v].empty(); }
  bool is_first_child(std::size_t v) const { return v != 0 && children[parent[v]].front() == v; }
};

// Renders the tree hanging from `root` in an adjacency list whose vertex ids are arbitrary.
// When preorder is non-null it receives the ids in the preorder of the rendered tree.
PlaneTree tree_from_adjacency(const std::vector<std::vector<std::size_t>>& children, std::size_t root,
                              std::vector<std::size_t>* preorder = nullptr);

TreeStats tree_stats(const PlaneTree& t);
// Same as tree_stats on a valid encoding without constructing a PlaneTree.
TreeStats encoding_stats(std::string_view encoding);

// Every nonroot vertex is an internal non-first child or a leaf first child.
// The single-vertex tree is not legal.
bool is_legal_tree(const PlaneTree& t);
bool is_legal_encoding(std::string_view encoding);

// New leaf as first child of every vertex: n edges -> 2n + 1 edges, always legal.
PlaneTree attach_leaves(const PlaneTree& t);
// Inverse of attach_leaves; throws DomainError unless is_legal_tree(b).
PlaneTree detach_leaves(const PlaneTree& b);

// All trees with n edges, ascending by encoding, restricted to encodings starting with prefix.
template <class Fn>
void for_each_plane_tree(std::size_t n, Fn&& fn, std::string_view prefix = {}) {
  for_each_lattice_word(StepAlphabet::parentheses(), 2 * n, prefix,
                        [&](std::string_view w) { fn(PlaneTree::from_trusted_encoding(std::string(w))); });
}

std::vector<PlaneTree> enumerate_plane_trees(std::size_t n);

}  // namespace catalan
