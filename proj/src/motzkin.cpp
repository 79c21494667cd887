#include "catalan/motzkin.hpp"

#include "catalan/errors.hpp"

namespace catalan {

TwoMotzkinPath TwoMotzkinPath::from_trusted(std::string steps) {
  TwoMotzkinPath p;
  p.steps_ = std::move(steps);
  return p;
}

DyckPath DyckPath::from_trusted(std::string steps) {
  DyckPath d;
  d.steps_ = std::move(steps);
  return d;
}

TwoMotzkinPath parse_path(std::string_view text) {
  validate_lattice_word(StepAlphabet::two_motzkin(), text);
  return TwoMotzkinPath::from_trusted(std::string(text));
}

std::string render_path(const TwoMotzkinPath& p) { return p.steps(); }

DyckPath parse_dyck(std::string_view text) {
  validate_lattice_word(StepAlphabet::dyck(), text);
  return DyckPath::from_trusted(std::string(text));
}

std::string render_dyck(const DyckPath& d) { return d.steps(); }

PathStats path_stats(std::string_view steps) {
  PathStats s;
  for (char c : steps) {
    if (c == 'U') ++s.ups;
    if (c == 'W') ++s.wavies;
  }
  s.statistic = 1 + s.ups + s.wavies;
  s.sign = s.statistic % 2 == 0 ? 1 : -1;
  return s;
}

PathStats path_stats(const TwoMotzkinPath& p) { return path_stats(p.steps()); }

bool has_level_step(const TwoMotzkinPath& p) { return p.steps().find_first_of("SW") != std::string::npos; }

std::vector<TwoMotzkinPath> enumerate_motzkin(std::size_t length) {
  std::vector<TwoMotzkinPath> out;
  for_each_motzkin(length, [&](TwoMotzkinPath p) { out.push_back(std::move(p)); });
  return out;
}

std::vector<DyckPath> enumerate_dyck(std::size_t semilength) {
  std::vector<DyckPath> out;
  for_each_dyck(semilength, [&](DyckPath d) { out.push_back(std::move(d)); });
  return out;
}

TwoMotzkinPath upsilon(const TwoMotzkinPath& p) {
  std::string s = p.steps();
  const std::size_t i = s.find_first_of("SW");
  if (i == std::string::npos) throw DomainError("path has no level step: \"" + s + "\"");
  s[i] = s[i] == 'S' ? 'W' : 'S';
  return TwoMotzkinPath::from_trusted(std::move(s));
}

TwoMotzkinPath tree_to_motzkin(const PlaneTree& t) {
  if (t.edge_count() == 0) throw DomainError("tree must have at least one edge");
  const TreeLayout l = TreeLayout::of(t);
  std::string steps;
  steps.reserve(t.edge_count() - 1);
  for (std::size_t v = 1; v + 1 < l.size(); ++v) {
    const bool has_child = !l.is_leaf(v);
    const bool has_next = l.children[l.parent[v]].back() != v;
    steps.push_back(has_child ? (has_next ? 'U' : 'S') : (has_next ? 'W' : 'D'));
  }
  return TwoMotzkinPath::from_trusted(std::move(steps));
}

PlaneTree motzkin_to_tree(const TwoMotzkinPath& p) {
  // The final vertex in preorder always has neither children nor a next sibling.
  const std::string word = p.steps() + 'D';
  std::string enc;
  enc.reserve(2 * word.size());
  // one entry per open vertex: whether a next sibling is still owed after it closes
  std::vector<bool> owes_sibling;
  for (char c : word) {
    const bool has_child = c == 'U' || c == 'S';
    const bool has_next = c == 'U' || c == 'W';
    enc.push_back('(');
    if (has_child) {
      owes_sibling.push_back(has_next);
      continue;
    }
    enc.push_back(')');
    if (has_next) continue;
    // close the chain of last-children above this vertex
    while (!owes_sibling.empty()) {
      const bool next = owes_sibling.back();
      owes_sibling.pop_back();
      enc.push_back(')');
      if (next) break;
    }
  }
  return PlaneTree::from_trusted_encoding(std::move(enc));
}

DyckPath motzkin_to_dyck(const TwoMotzkinPath& p) {
  std::string d = "U";
  d.reserve(2 * p.length() + 2);
  for (char c : p.steps()) {
    switch (c) {
      case 'U': d += "UU"; break;
      case 'D': d += "DD"; break;
      case 'S': d += "UD"; break;
      default: d += "DU"; break;
    }
  }
  d.push_back('D');
  return DyckPath::from_trusted(std::move(d));
}

TwoMotzkinPath dyck_to_motzkin(const DyckPath& d) {
  if (d.semilength() == 0) throw DomainError("Dyck path must have semilength at least 1");
  const std::string& s = d.steps();
  std::string p;
  p.reserve(d.semilength() - 1);
  for (std::size_t i = 1; i + 1 < s.size(); i += 2) {
    const char a = s[i];
    const char b = s[i + 1];
    p.push_back(a == b ? a : (a == 'U' ? 'S' : 'W'));
  }
  return TwoMotzkinPath::from_trusted(std::move(p));
}

std::size_t udu_count(std::string_view s) {
  std::size_t k = 0;
  for (std::size_t i = 0; i + 2 < s.size(); ++i)
    if (s[i] == 'U' && s[i + 1] == 'D' && s[i + 2] == 'U') ++k;
  return k;
}

std::size_t udu_count(const DyckPath& d) { return udu_count(d.steps()); }

}  // namespace catalan
