#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catalan/lattice_words.hpp"
#include "catalan/plane_tree.hpp"

namespace catalan {

enum class Step : char { Up = 'U', Down = 'D', Straight = 'S', Wavy = 'W' };

// Steps over {U, D, S, W} that start and end on the axis and never go below it.
class TwoMotzkinPath {
 public:
  TwoMotzkinPath() = default;

  std::size_t length() const { return steps_.size(); }
  const std::string& steps() const { return steps_; }
  Step operator[](std::size_t i) const { return static_cast<Step>(steps_[i]); }

  friend bool operator==(const TwoMotzkinPath&, const TwoMotzkinPath&) = default;
  friend auto operator<=>(const TwoMotzkinPath&, const TwoMotzkinPath&) = default;

  static TwoMotzkinPath from_trusted(std::string steps);

 private:
  std::string steps_;
};

// Level-free lattice path over {U, D}.
class DyckPath {
 public:
  DyckPath() = default;

  std::size_t length() const { return steps_.size(); }
  std::size_t semilength() const { return steps_.size() / 2; }
  const std::string& steps() const { return steps_; }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

  static DyckPath from_trusted(std::string steps);

 private:
  std::string steps_;
};

struct PathStats {
  std::size_t ups = 0;
  std::size_t wavies = 0;
  std::size_t statistic = 1;  // 1 + ups + wavies
  int sign = -1;              // (-1)^statistic
  friend bool operator==(const PathStats&, const PathStats&) = default;
};

TwoMotzkinPath parse_path(std::string_view text);
std::string render_path(const TwoMotzkinPath& p);
DyckPath parse_dyck(std::string_view text);
std::string render_dyck(const DyckPath& d);

PathStats path_stats(const TwoMotzkinPath& p);
PathStats path_stats(std::string_view steps);

bool has_level_step(const TwoMotzkinPath& p);

template <class Fn>
void for_each_motzkin(std::size_t length, Fn&& fn, std::string_view prefix = {}) {
  for_each_lattice_word(StepAlphabet::two_motzkin(), length, prefix,
                        [&](std::string_view w) { fn(TwoMotzkinPath::from_trusted(std::string(w))); });
}

template <class Fn>
void for_each_dyck(std::size_t semilength, Fn&& fn, std::string_view prefix = {}) {
  for_each_lattice_word(StepAlphabet::dyck(), 2 * semilength, prefix,
                        [&](std::string_view w) { fn(DyckPath::from_trusted(std::string(w))); });
}

std::vector<TwoMotzkinPath> enumerate_motzkin(std::size_t length);
std::vector<DyckPath> enumerate_dyck(std::size_t semilength);

// Toggles the first level step between straight and wavy. Throws DomainError when the
// path has no level step.
TwoMotzkinPath upsilon(const TwoMotzkinPath& p);

// Plane trees with n >= 1 edges <-> paths of length n - 1, with leaves - 1 = ups + wavies.
// Every nonroot vertex in preorder, except the last, contributes one step according to
// whether it has children and whether it has a next sibling:
//   both -> U, neither -> D, children only -> S, next sibling only -> W.
// (This is the preorder degree word of the first-child/next-sibling binary tree.)
TwoMotzkinPath tree_to_motzkin(const PlaneTree& t);
PlaneTree motzkin_to_tree(const TwoMotzkinPath& p);

// Paths of length m <-> Dyck paths of semilength m + 1: U (expanded path) D with
// U -> UU, D -> DD, S -> UD, W -> DU.
DyckPath motzkin_to_dyck(const TwoMotzkinPath& p);
TwoMotzkinPath dyck_to_motzkin(const DyckPath& d);

// Occurrences of the factor UDU, overlaps counted.
std::size_t udu_count(const DyckPath& d);
std::size_t udu_count(std::string_view steps);

}  // namespace catalan
