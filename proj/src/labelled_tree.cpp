#include <cctype>
#include <set>

#include "catalan/errors.hpp"
#include "catalan/labelled.hpp"

namespace catalan {

std::string render_label(const Label& l) { return std::to_string(l.value) + (l.marked ? "*" : ""); }

namespace {

class LabelledTreeParser {
 public:
  explicit LabelledTreeParser(std::string_view text) : text_(text) {}

  LabelledTree run() {
    node();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
    LabelledTree t{PlaneTree::from_trusted_encoding(encoding_), labels_};
    const int n1 = static_cast<int>(labels_.size());
    std::vector<bool> seen(labels_.size() + 1, false);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      const int v = labels_[i];
      if (v < 1 || v > n1) throw ParseError("label " + std::to_string(v) + " outside 1.." + std::to_string(n1), positions_[i]);
      if (seen[v]) throw ParseError("duplicate label " + std::to_string(v), positions_[i]);
      seen[v] = true;
    }
    return t;
  }

 private:
  void node() {
    positions_.push_back(pos_);
    labels_.push_back(number());
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      while (true) {
        encoding_.push_back('(');
        node();
        encoding_.push_back(')');
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw ParseError("expected ',' or ')'", pos_);
      }
    }
  }

  int number() {
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) throw ParseError("label too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a label", pos_);
    return static_cast<int>(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::string encoding_;
  std::vector<int> labels_;
  std::vector<std::size_t> positions_;
};

}  // namespace

LabelledTree parse_labelled_tree(std::string_view text) { return LabelledTreeParser(text).run(); }

std::string render_labelled_tree(const LabelledTree& t) {
  const TreeLayout l = TreeLayout::of(t.shape);
  std::string out;
  auto rec = [&](auto&& self, std::size_t v) -> void {
    out += std::to_string(t.labels[v]);
    if (l.children[v].empty()) return;
    out.push_back('(');
    for (std::size_t i = 0; i < l.children[v].size(); ++i) {
      if (i) out.push_back(',');
      self(self, l.children[v][i]);
    }
    out.push_back(')');
  };
  rec(rec, 0);
  return out;
}

MatchSet::MatchSet(std::vector<Match> matches) : matches_(std::move(matches)) {
  std::sort(matches_.begin(), matches_.end(),
            [](const Match& a, const Match& b) { return a.min_value() < b.min_value(); });
}

namespace {

Label parse_label(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  long v = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    v = v * 10 + (text[pos] - '0');
    if (v > 1'000'000) throw ParseError("label too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError("expected a label", pos);
  Label l{static_cast<int>(v), false};
  if (pos < text.size() && text[pos] == '*') {
    l.marked = true;
    ++pos;
  }
  return l;
}

}  // namespace

MatchSet parse_match_set(std::string_view text) {
  std::vector<Match> ms;
  std::size_t pos = 0;
  while (true) {
    Match m;
    m.root = parse_label(text, pos);
    if (pos >= text.size() || text[pos] != '>') throw ParseError("expected '>'", pos);
    ++pos;
    m.leaf = parse_label(text, pos);
    ms.push_back(m);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  MatchSet f(std::move(ms));
  validate_match_set(f);
  return f;
}

std::string render_match_set(const MatchSet& f) {
  std::string out;
  for (const auto& m : f.matches()) {
    if (!out.empty()) out.push_back(',');
    out += render_label(m.root) + ">" + render_label(m.leaf);
  }
  return out;
}

void validate_match_set(const MatchSet& f) {
  const std::size_t n = f.size();
  if (n == 0) throw DomainError("match set is empty");
  std::vector<bool> seen(2 * n + 1, false);
  for (const auto& m : f.matches()) {
    for (const Label& l : {m.root, m.leaf}) {
      if (l.value < 1 || static_cast<std::size_t>(l.value) > 2 * n)
        throw DomainError("label " + render_label(l) + " outside 1.." + std::to_string(2 * n));
      if (seen[l.value]) throw DomainError("label " + std::to_string(l.value) + " used twice");
      seen[l.value] = true;
      const bool should_be_marked = static_cast<std::size_t>(l.value) >= n + 2;
      if (l.marked != should_be_marked)
        throw DomainError("label " + render_label(l) + (should_be_marked ? " must be marked" : " must not be marked"));
    }
  }
}

std::vector<LabelledTree> enumerate_labelled_trees(std::size_t n) {
  std::vector<LabelledTree> out;
  for_each_labelled_tree(n, [&](const LabelledTree& t) { out.push_back(t); });
  return out;
}

void for_each_match_set(std::size_t n, const std::function<void(const MatchSet&)>& fn) {
  if (n == 0) return;
  const int top = static_cast<int>(2 * n);
  auto label = [&](int v) { return Label{v, static_cast<std::size_t>(v) >= n + 2}; };
  std::vector<bool> used(top + 1, false);
  std::vector<std::pair<int, int>> pairs;
  auto rec = [&](auto&& self) -> void {
    int a = 1;
    while (a <= top && used[a]) ++a;
    if (a > top) {
      // pairs are already in canonical order: each starts at the smallest free label
      for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
        std::vector<Match> ms;
        ms.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
          const auto [x, y] = pairs[k];
          ms.push_back((bits >> k) & 1 ? Match{label(y), label(x)} : Match{label(x), label(y)});
        }
        fn(MatchSet(std::move(ms)));
      }
      return;
    }
    used[a] = true;
    for (int b = a + 1; b <= top; ++b) {
      if (used[b]) continue;
      used[b] = true;
      pairs.emplace_back(a, b);
      self(self);
      pairs.pop_back();
      used[b] = false;
    }
    used[a] = false;
  };
  rec(rec);
}

std::vector<MatchSet> enumerate_match_sets(std::size_t n) {
  std::vector<MatchSet> out;
  for_each_match_set(n, [&](const MatchSet& f) { out.push_back(f); });
  return out;
}

Count count_pure_sets(std::size_t n) { return pure_match_set_count(static_cast<unsigned>(n)); }

Count count_pure_sets_by_enumeration(std::size_t n) {
  Count c = 0;
  for_each_match_set(n, [&](const MatchSet& f) {
    if (std::all_of(f.matches().begin(), f.matches().end(), [](const Match& m) { return m.pure(); })) ++c;
  });
  return c;
}

std::size_t unmarked_leaf_count(const MatchSet& f) {
  return static_cast<std::size_t>(
      std::count_if(f.matches().begin(), f.matches().end(), [](const Match& m) { return !m.leaf.marked; }));
}

}  // namespace catalan
