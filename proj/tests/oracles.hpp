#pragma once

// Brute-force reference computations. Nothing here calls into the library: words come
// from the full Cartesian product over the alphabet and are filtered by a height scan.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

inline int step_of(char c) {
  switch (c) {
    case '(': case 'U': return 1;
    case ')': case 'D': return -1;
    default: return 0;
  }
}

inline bool is_lattice_word(const std::string& w) {
  int h = 0;
  for (char c : w) {
    h += step_of(c);
    if (h < 0) return false;
  }
  return h == 0;
}

// Every word of the given length over `glyphs` (in the given order), kept if it is a lattice word.
inline std::vector<std::string> lattice_words(const std::string& glyphs, std::size_t length) {
  std::vector<std::string> out;
  std::vector<std::size_t> digit(length, 0);
  std::string w(length, glyphs[0]);
  while (true) {
    for (std::size_t i = 0; i < length; ++i) w[i] = glyphs[digit[i]];
    if (is_lattice_word(w)) out.push_back(w);
    std::size_t i = length;
    while (i > 0 && ++digit[i - 1] == glyphs.size()) digit[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

inline std::vector<std::string> trees(std::size_t n) { return lattice_words("()", 2 * n); }
inline std::vector<std::string> motzkin(std::size_t length) { return lattice_words("UDSW", length); }
inline std::vector<std::string> dyck(std::size_t semilength) { return lattice_words("UD", 2 * semilength); }

inline long long catalan(std::size_t n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c[n];
}

inline long long falling(long long from, long long to) {
  long long r = 1;
  for (long long k = from; k <= to; ++k) r *= k;
  return r;
}

// (2n)!/n!
inline long long labelled_count(std::size_t n) { return falling(static_cast<long long>(n) + 1, 2 * static_cast<long long>(n)); }

// Vertex tables of a parenthesis word, root = 0, preorder numbering.
struct Tree {
  std::vector<int> parent{-1};
  std::vector<int> depth{0};
  std::vector<std::vector<int>> kids{{}};
};

inline Tree build(const std::string& enc) {
  Tree t;
  int cur = 0;
  for (char c : enc) {
    if (c == '(') {
      int v = static_cast<int>(t.parent.size());
      t.parent.push_back(cur);
      t.depth.push_back(t.depth[cur] + 1);
      t.kids.emplace_back();
      t.kids[cur].push_back(v);
      cur = v;
    } else {
      cur = t.parent[cur];
    }
  }
  return t;
}

inline std::string encode(const Tree& t, int v = 0) {
  std::string s;
  for (int c : t.kids[v]) s += "(" + encode(t, c) + ")";
  return s;
}

inline std::size_t leaves(const std::string& enc) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < enc.size(); ++i) n += enc[i] == '(' && enc[i + 1] == ')';
  return enc.empty() ? 1 : n;
}

inline std::size_t even_level(const std::string& enc) {
  std::size_t n = 1, h = 0;
  for (char c : enc) {
    if (c == '(') n += (++h % 2 == 0);
    else --h;
  }
  return n;
}

inline bool legal(const std::string& enc) {
  Tree t = build(enc);
  if (t.parent.size() == 1) return false;
  for (std::size_t v = 1; v < t.parent.size(); ++v) {
    bool leaf = t.kids[v].empty();
    bool first = t.kids[t.parent[v]].front() == static_cast<int>(v);
    if (leaf != first) return false;
  }
  return true;
}

inline std::size_t count_factor(const std::string& w, const std::string& f) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i) n += w.compare(i, f.size(), f) == 0;
  return n;
}

// Signed leaf sum over trees with n edges.
inline long long tree_parity_diff(std::size_t n) {
  long long d = 0;
  for (const auto& t : trees(n)) d += leaves(t) % 2 == 0 ? 1 : -1;
  return d;
}

// Match sets on 2n labels, as canonical sorted vectors of (root, leaf), by brute force over
// all permutations read as consecutive (root, leaf) pairs.
inline std::size_t match_set_count(std::size_t n) {
  std::vector<int> p(2 * n);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i) + 1;
  std::set<std::vector<std::pair<int, int>>> seen;
  do {
    std::vector<std::pair<int, int>> m;
    for (std::size_t i = 0; i < p.size(); i += 2) m.emplace_back(p[i], p[i + 1]);
    std::sort(m.begin(), m.end());
    seen.insert(m);
  } while (std::next_permutation(p.begin(), p.end()));
  return seen.size();
}

inline std::map<std::size_t, long long> histogram(const std::vector<std::size_t>& xs) {
  std::map<std::size_t, long long> h;
  for (auto x : xs) ++h[x];
  return h;
}

}  // namespace oracle
