#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "catalan/counting.hpp"
#include "catalan/plane_tree.hpp"

namespace catalan {

// For size parameter n: unmarked values are 1..n+1, marked values n+2..2n (rendered "7*").
struct Label {
  int value = 0;
  bool marked = false;
  friend auto operator<=>(const Label&, const Label&) = default;
};

std::string render_label(const Label& l);

// Plane tree with the distinct values 1..n+1 on its vertices, listed in preorder.
struct LabelledTree {
  PlaneTree shape;
  std::vector<int> labels;

  std::size_t edge_count() const { return shape.edge_count(); }
  friend bool operator==(const LabelledTree&, const LabelledTree&) = default;
  friend auto operator<=>(const LabelledTree&, const LabelledTree&) = default;
};

// "label(child,child,...)", e.g. "1(2,3(4))".
LabelledTree parse_labelled_tree(std::string_view text);
std::string render_labelled_tree(const LabelledTree& t);

// Two-vertex rooted tree.
struct Match {
  Label root;
  Label leaf;

  bool pure() const { return root.marked == leaf.marked; }
  int min_value() const { return std::min(root.value, leaf.value); }
  Match flipped() const { return {leaf, root}; }
  friend bool operator==(const Match&, const Match&) = default;
};

// n matches over {1..n+1} ∪ {(n+2)*..(2n)*}. Stored in canonical order: ascending by the
// smaller label of each match.
class MatchSet {
 public:
  MatchSet() = default;
  explicit MatchSet(std::vector<Match> matches);

  std::size_t size() const { return matches_.size(); }
  const std::vector<Match>& matches() const { return matches_; }

  friend bool operator==(const MatchSet&, const MatchSet&) = default;

 private:
  std::vector<Match> matches_;
};

// Comma-separated "root>leaf" pairs, e.g. "1>2,4*>3".
MatchSet parse_match_set(std::string_view text);
std::string render_match_set(const MatchSet& f);

// Throws DomainError unless the set is a valid match set of size n >= 1.
void validate_match_set(const MatchSet& f);

// Shapes in encoding order; for each shape, labellings in lexicographic order of the
// preorder label sequence. (2n)!/n! trees in total.
template <class Fn>
void for_each_labelled_tree(std::size_t n, Fn&& fn, std::string_view shape_prefix = {}) {
  std::vector<int> labels(n + 1);
  for_each_plane_tree(
      n,
      [&](const PlaneTree& shape) {
        std::iota(labels.begin(), labels.end(), 1);
        do {
          fn(LabelledTree{shape, labels});
        } while (std::next_permutation(labels.begin(), labels.end()));
      },
      shape_prefix);
}

std::vector<LabelledTree> enumerate_labelled_trees(std::size_t n);

// Pairings by matching the smallest free label with each larger one in turn; for each
// pairing, orientations by bitmask over its canonical order. (2n-1)!! 2^n sets in total.
void for_each_match_set(std::size_t n, const std::function<void(const MatchSet&)>& fn);
std::vector<MatchSet> enumerate_match_sets(std::size_t n);

// Repeatedly joins the unmarked tree with the smallest root into the tree holding the
// smallest marked vertex j*: a horizontal merge when j* is that tree's root, a vertical
// merge (substitution for the leaf j*) otherwise.
LabelledTree merge(const MatchSet& f);

// Inverse of merge. Merges are undone in decreasing order of marked label; each undo
// splits one tree back into the two trees the forward step would have joined, and
// branches that break the forward selection rule are abandoned.
MatchSet decompose(const LabelledTree& t);

// Flips the mixed match of decompose(t) with the smallest unmarked label and merges back.
// Throws DomainError when every match is pure.
LabelledTree psi(const LabelledTree& t);

// |A_n| from the closed form.
Count count_pure_sets(std::size_t n);
// |A_n| by walking every match set.
Count count_pure_sets_by_enumeration(std::size_t n);

// Unmarked leaves across the matches; equals the leaf count of merge(f).
std::size_t unmarked_leaf_count(const MatchSet& f);

}  // namespace catalan
