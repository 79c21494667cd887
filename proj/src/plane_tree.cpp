#include "catalan/plane_tree.hpp"

#include "catalan/errors.hpp"

namespace catalan {

PlaneTree::PlaneTree(const std::vector<PlaneTree>& children) {
  for (const auto& c : children) {
    encoding_.push_back('(');
    encoding_ += c.encoding_;
    encoding_.push_back(')');
  }
}

PlaneTree PlaneTree::from_trusted_encoding(std::string encoding) {
  PlaneTree t;
  t.encoding_ = std::move(encoding);
  return t;
}

std::vector<PlaneTree> PlaneTree::children() const {
  std::vector<PlaneTree> out;
  std::size_t start = 0;
  long h = 0;
  for (std::size_t i = 0; i < encoding_.size(); ++i) {
    h += encoding_[i] == '(' ? 1 : -1;
    if (h == 0) {
      out.push_back(from_trusted_encoding(encoding_.substr(start + 1, i - start - 1)));
      start = i + 1;
    }
  }
  return out;
}

PlaneTree parse_tree(std::string_view text) {
  validate_lattice_word(StepAlphabet::parentheses(), text);
  return PlaneTree::from_trusted_encoding(std::string(text));
}

std::string render_tree(const PlaneTree& t) { return t.encoding(); }

TreeLayout TreeLayout::of(const PlaneTree& t) {
  TreeLayout l;
  const std::size_t n = t.vertex_count();
  l.parent.assign(n, npos);
  l.depth.assign(n, 0);
  l.children.assign(n, {});
  std::size_t current = 0;
  std::size_t next = 1;
  for (char c : t.encoding()) {
    if (c == '(') {
      l.parent[next] = current;
      l.depth[next] = l.depth[current] + 1;
      l.children[current].push_back(next);
      current = next++;
    } else {
      current = l.parent[current];
    }
  }
  return l;
}

PlaneTree tree_from_adjacency(const std::vector<std::vector<std::size_t>>& children, std::size_t root,
                              std::vector<std::size_t>* preorder) {
  std::string enc;
  if (preorder) preorder->clear();
  // explicit stack of (vertex, next child slot)
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
  if (preorder) preorder->push_back(root);
  while (!stack.empty()) {
    auto& [v, slot] = stack.back();
    if (slot < children[v].size()) {
      const std::size_t c = children[v][slot++];
      enc.push_back('(');
      if (preorder) preorder->push_back(c);
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) enc.push_back(')');
    }
  }
  return PlaneTree::from_trusted_encoding(std::move(enc));
}

TreeStats encoding_stats(std::string_view e) {
  TreeStats s;
  if (e.empty()) {
    s.leaves = 1;
    s.even_level = 1;
  } else {
    s.even_level = 1;
    long h = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == '(') {
        ++h;  // depth of the vertex this opens
        if (h % 2 == 0) ++s.even_level;
        if (e[i + 1] == ')') ++s.leaves;
      } else {
        --h;
      }
    }
  }
  s.parity = s.leaves % 2 == 0 ? Parity::Even : Parity::Odd;
  s.sign = s.parity == Parity::Even ? 1 : -1;
  return s;
}

TreeStats tree_stats(const PlaneTree& t) { return encoding_stats(t.encoding()); }

bool is_legal_encoding(std::string_view e) {
  if (e.empty()) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != '(') continue;
    const bool first = i == 0 || e[i - 1] == '(';
    const bool leaf = e[i + 1] == ')';
    if (first != leaf) return false;
  }
  return true;
}

bool is_legal_tree(const PlaneTree& t) { return is_legal_encoding(t.encoding()); }

PlaneTree attach_leaves(const PlaneTree& t) {
  std::string out = "()";
  out.reserve(2 + 2 * t.encoding().size() + 2);
  for (char c : t.encoding()) {
    if (c == '(')
      out += "(()";
    else
      out.push_back(')');
  }
  return PlaneTree::from_trusted_encoding(std::move(out));
}

PlaneTree detach_leaves(const PlaneTree& b) {
  const std::string& e = b.encoding();
  if (!is_legal_encoding(e)) throw DomainError("tree is not legal: \"" + e + "\"");
  std::string out;
  out.reserve(e.size() / 2);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == '(' && e[i + 1] == ')') {
      ++i;  // drop the attached leaf
      continue;
    }
    out.push_back(e[i]);
  }
  return PlaneTree::from_trusted_encoding(std::move(out));
}

std::vector<PlaneTree> enumerate_plane_trees(std::size_t n) {
  std::vector<PlaneTree> out;
  for_each_plane_tree(n, [&](PlaneTree t) { out.push_back(std::move(t)); });
  return out;
}

}  // namespace catalan
