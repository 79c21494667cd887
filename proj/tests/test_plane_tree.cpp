#include "doctest.h"

#include "catalan/counting.hpp"
#include "catalan/errors.hpp"
#include "catalan/lattice_words.hpp"
#include "catalan/plane_tree.hpp"
#include "oracles.hpp"

using namespace catalan;

TEST_SUITE("core_trees") {

TEST_CASE("catalan numbers match the recurrence") {
  for (unsigned n = 0; n <= 20; ++n) CHECK(to_int64(catalan_number(n)) == oracle::catalan(n));
  CHECK(catalan_number(14) == 2674440);
  CHECK(catalan_number(30) == Count("3814986502092304"));
}

TEST_CASE("labelled counts and factorials") {
  for (unsigned n = 0; n <= 8; ++n) CHECK(to_int64(labelled_tree_count(n)) == oracle::labelled_count(n));
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("enumeration equals the filtered product, in lexicographic order") {
  for (std::size_t n = 0; n <= 7; ++n) {
    std::vector<std::string> got;
    for_each_plane_tree(n, [&](const PlaneTree& t) { got.push_back(t.encoding()); });
    CHECK(got == oracle::trees(n));
  }
  auto t3 = enumerate_plane_trees(3);
  REQUIRE(t3.size() == 5);
  CHECK(render_tree(t3.front()) == "((()))");
  CHECK(render_tree(t3.back()) == "()()()");
}

TEST_CASE("prefix restricted enumeration") {
  std::vector<std::string> got;
  for_each_plane_tree(3, [&](const PlaneTree& t) { got.push_back(t.encoding()); }, "()");
  CHECK(got == std::vector<std::string>{"()(())", "()()()"});
  for_each_plane_tree(3, [&](const PlaneTree&) { FAIL("no tree starts with a close"); }, ")");
}

TEST_CASE("lattice cursor over the 2-Motzkin alphabet") {
  const auto& a = StepAlphabet::two_motzkin();
  for (std::size_t len = 0; len <= 6; ++len) {
    std::vector<std::string> got;
    for (LatticeWordCursor c(a, len); c.valid(); c.advance()) got.push_back(c.word());
    CHECK(got == oracle::motzkin(len));
  }
}

TEST_CASE("parse errors carry the position") {
  CHECK(parse_tree("").edge_count() == 0);
  CHECK(parse_tree("(()())").edge_count() == 3);
  auto position_of = [](std::string_view s) {
    try {
      parse_tree(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position_of(")(") == 0);
  CHECK(position_of("(()))") == 4);
  CHECK(position_of("()(") == 2);
  CHECK(position_of("(x)") == 1);
  CHECK(position_of("((") == 0);
}

TEST_CASE("statistics agree with the oracle scans") {
  for (std::size_t n = 0; n <= 8; ++n)
    for (const auto& e : oracle::trees(n)) {
      TreeStats s = tree_stats(parse_tree(e));
      CHECK(s.leaves == oracle::leaves(e));
      CHECK(s.even_level == oracle::even_level(e));
      CHECK(s.sign == (s.leaves % 2 == 0 ? 1 : -1));
      CHECK((s.parity == Parity::Even) == (s.leaves % 2 == 0));
      CHECK(encoding_stats(e) == s);
    }
  TreeStats s = tree_stats(parse_tree("(()())"));
  CHECK(s.leaves == 2);
  CHECK(s.even_level == 3);
}

TEST_CASE("single vertex tree") {
  PlaneTree t;
  CHECK(t.vertex_count() == 1);
  CHECK(tree_stats(t).leaves == 1);
  CHECK_FALSE(is_legal_tree(t));
}

TEST_CASE("children constructor and children() are inverse") {
  for (const auto& t : enumerate_plane_trees(6)) CHECK(PlaneTree(t.children()) == t);
}

TEST_CASE("layout follows preorder") {
  TreeLayout l = TreeLayout::of(parse_tree("(()())()"));
  REQUIRE(l.size() == 5);
  CHECK(l.parent[0] == TreeLayout::npos);
  CHECK(l.children[0] == std::vector<std::size_t>{1, 4});
  CHECK(l.children[1] == std::vector<std::size_t>{2, 3});
  CHECK(l.depth[3] == 2);
  CHECK(l.is_first_child(2));
  CHECK_FALSE(l.is_first_child(3));
  CHECK(l.is_leaf(4));
  std::vector<std::size_t> order;
  CHECK(tree_from_adjacency(l.children, 0, &order) == parse_tree("(()())()"));
}

TEST_CASE("legality agrees with the oracle") {
  for (std::size_t n = 0; n <= 9; ++n) {
    long long legal = 0;
    for (const auto& e : oracle::trees(n)) {
      bool l = oracle::legal(e);
      CHECK(is_legal_tree(parse_tree(e)) == l);
      CHECK(is_legal_encoding(e) == l);
      legal += l;
    }
    CHECK(legal == (n % 2 == 0 ? 0 : oracle::catalan((n - 1) / 2)));
  }
  CHECK(is_legal_tree(parse_tree("()(())")));
  CHECK_FALSE(is_legal_tree(parse_tree("(())")));
}

TEST_CASE("attach and detach leaves") {
  CHECK(render_tree(attach_leaves(PlaneTree{})) == "()");
  CHECK(render_tree(attach_leaves(parse_tree("()"))) == "()(())");
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& t : enumerate_plane_trees(n)) {
      PlaneTree b = attach_leaves(t);
      CHECK(b.edge_count() == 2 * n + 1);
      CHECK(is_legal_tree(b));
      CHECK(detach_leaves(b) == t);
    }
  CHECK_THROWS_AS(detach_leaves(parse_tree("(())")), DomainError);
}

}  // TEST_SUITE
