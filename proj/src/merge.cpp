#include <limits>
#include <optional>
#include <stdexcept>

#include "catalan/errors.hpp"
#include "catalan/labelled.hpp"

namespace catalan {
namespace {

struct Node {
  Label label;
  std::vector<Node> children;
};

bool has_marked(const Node& t) {
  if (t.label.marked) return true;
  for (const auto& c : t.children)
    if (has_marked(c)) return true;
  return false;
}

bool contains(const Node& t, const Label& l) {
  if (t.label == l) return true;
  for (const auto& c : t.children)
    if (contains(c, l)) return true;
  return false;
}

// Replaces the leaf carrying `l` by `sub`, keeping its position among its siblings.
bool substitute_leaf(Node& t, const Label& l, const Node& sub) {
  for (auto& c : t.children) {
    if (c.label == l && c.children.empty()) {
      c = sub;
      return true;
    }
    if (substitute_leaf(c, l, sub)) return true;
  }
  return false;
}

LabelledTree to_labelled_tree(const Node& root) {
  std::string enc;
  std::vector<int> labels;
  auto rec = [&](auto&& self, const Node& v) -> void {
    labels.push_back(v.label.value);
    for (const auto& c : v.children) {
      enc.push_back('(');
      self(self, c);
      enc.push_back(')');
    }
  };
  rec(rec, root);
  return {PlaneTree::from_trusted_encoding(std::move(enc)), std::move(labels)};
}

Node from_labelled_tree(const LabelledTree& t) {
  const TreeLayout l = TreeLayout::of(t.shape);
  auto rec = [&](auto&& self, std::size_t v) -> Node {
    Node out{{t.labels[v], false}, {}};
    out.children.reserve(l.children[v].size());
    for (std::size_t c : l.children[v]) out.children.push_back(self(self, c));
    return out;
  };
  return rec(rec, 0);
}

// Backward search state: the forest after all merges with marked label > j have been undone.
class Unmerger {
 public:
  explicit Unmerger(int n) : n_(n) {}

  std::optional<std::vector<Node>> run(std::vector<Node> forest) { return undo(std::move(forest), 2 * n_); }

 private:
  std::optional<std::vector<Node>> undo(std::vector<Node> forest, int j) {
    if (j == n_ + 1) {
      for (const auto& t : forest)
        if (t.children.size() != 1 || !t.children.front().children.empty()) return std::nullopt;
      return forest;
    }
    const Label marked{j, true};

    std::vector<bool> unmarked(forest.size());
    for (std::size_t k = 0; k < forest.size(); ++k) unmarked[k] = !has_marked(forest[k]);

    for (std::size_t k = 0; k < forest.size(); ++k) {
      // the forward step picked the unmarked tree with the smallest root
      int bound = std::numeric_limits<int>::max();
      for (std::size_t q = 0; q < forest.size(); ++q)
        if (q != k && unmarked[q]) bound = std::min(bound, forest[q].label.value);

      const Node& m = forest[k];
      auto attempt = [&](Node first, Node starred) -> std::optional<std::vector<Node>> {
        std::vector<Node> next;
        next.reserve(forest.size() + 1);
        for (std::size_t q = 0; q < forest.size(); ++q)
          if (q != k) next.push_back(forest[q]);
        next.push_back(std::move(first));
        next.push_back(std::move(starred));
        return undo(std::move(next), j - 1);
      };

      // horizontal: root children split into a prefix kept by the root and a suffix under j*
      if (!m.label.marked && m.label.value < bound) {
        for (std::size_t s = 1; s < m.children.size(); ++s) {
          if (has_marked(m.children[s - 1])) break;
          Node first{m.label, {m.children.begin(), m.children.begin() + static_cast<std::ptrdiff_t>(s)}};
          Node starred{marked, {m.children.begin() + static_cast<std::ptrdiff_t>(s), m.children.end()}};
          if (auto r = attempt(std::move(first), std::move(starred))) return r;
        }
      }

      // vertical: an internal unmarked subtree is cut out and replaced by the leaf j*
      std::vector<std::size_t> path;
      std::optional<std::vector<Node>> found;
      auto visit = [&](auto&& self, const Node& v) -> bool {
        for (std::size_t i = 0; i < v.children.size(); ++i) {
          const Node& c = v.children[i];
          path.push_back(i);
          if (!c.children.empty() && c.label.value < bound && !has_marked(c)) {
            Node starred = m;
            Node* slot = &starred;
            for (std::size_t step : path) slot = &slot->children[step];
            Node first = std::move(*slot);
            *slot = Node{marked, {}};
            if ((found = attempt(std::move(first), std::move(starred)))) return true;
          }
          if (!c.children.empty() && self(self, c)) return true;
          path.pop_back();
        }
        return false;
      };
      if (visit(visit, m)) return found;
    }
    return std::nullopt;
  }

  int n_;
};

}  // namespace

LabelledTree merge(const MatchSet& f) {
  validate_match_set(f);
  std::vector<Node> forest;
  forest.reserve(f.size());
  for (const auto& m : f.matches()) forest.push_back(Node{m.root, {Node{m.leaf, {}}}});

  const int n = static_cast<int>(f.size());
  for (int j = n + 2; j <= 2 * n; ++j) {
    const Label star{j, true};
    std::size_t t = forest.size();
    std::size_t t_star = forest.size();
    for (std::size_t k = 0; k < forest.size(); ++k) {
      if (!has_marked(forest[k]) && (t == forest.size() || forest[k].label.value < forest[t].label.value)) t = k;
      if (contains(forest[k], star)) t_star = k;
    }
    // trees always outnumber the remaining marked labels by one, so an unmarked tree exists
    if (t == forest.size() || t_star == forest.size() || t == t_star)
      throw std::logic_error("merge invariant broken at " + render_label(star));

    Node joined;
    if (forest[t_star].label == star) {
      joined = std::move(forest[t]);
      for (auto& c : forest[t_star].children) joined.children.push_back(std::move(c));
    } else {
      joined = std::move(forest[t_star]);
      substitute_leaf(joined, star, forest[t]);
    }
    const std::size_t hi = std::max(t, t_star);
    const std::size_t lo = std::min(t, t_star);
    forest.erase(forest.begin() + static_cast<std::ptrdiff_t>(hi));
    forest.erase(forest.begin() + static_cast<std::ptrdiff_t>(lo));
    forest.push_back(std::move(joined));
  }
  return to_labelled_tree(forest.front());
}

MatchSet decompose(const LabelledTree& t) {
  const std::size_t n = t.edge_count();
  if (n == 0) throw DomainError("a labelled tree needs at least one edge to decompose");
  auto forest = Unmerger(static_cast<int>(n)).run({from_labelled_tree(t)});
  if (!forest) throw std::logic_error("no match decomposition for " + render_labelled_tree(t));
  std::vector<Match> ms;
  ms.reserve(n);
  for (const auto& m : *forest) ms.push_back(Match{m.label, m.children.front().label});
  return MatchSet(std::move(ms));
}

LabelledTree psi(const LabelledTree& t) {
  const MatchSet f = decompose(t);
  std::vector<Match> ms = f.matches();
  std::size_t chosen = ms.size();
  int best = std::numeric_limits<int>::max();
  for (std::size_t k = 0; k < ms.size(); ++k) {
    if (ms[k].pure()) continue;
    const int unmarked = ms[k].root.marked ? ms[k].leaf.value : ms[k].root.value;
    if (unmarked < best) {
      best = unmarked;
      chosen = k;
    }
  }
  if (chosen == ms.size())
    throw DomainError("every match in the decomposition is pure: " + render_labelled_tree(t));
  ms[chosen] = ms[chosen].flipped();
  return merge(MatchSet(std::move(ms)));
}

}  // namespace catalan
