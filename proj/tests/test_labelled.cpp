#include "doctest.h"

#include <set>

#include "catalan/counting.hpp"
#include "catalan/errors.hpp"
#include "catalan/labelled.hpp"
#include "oracles.hpp"

using namespace catalan;

namespace {
std::string merged(const std::string& f) { return render_labelled_tree(merge(parse_match_set(f))); }
std::string psi_of(const std::string& t) { return render_labelled_tree(psi(parse_labelled_tree(t))); }

std::size_t unmarked_leaves(const LabelledTree& t, std::size_t n) {
  TreeLayout l = TreeLayout::of(t.shape);
  std::size_t k = 0;
  for (std::size_t v = 0; v < l.size(); ++v) k += l.is_leaf(v) && t.labels[v] <= static_cast<int>(n) + 1;
  return k;
}
}  // namespace

TEST_SUITE("labelled_trees") {

TEST_CASE("labelled tree text format") {
  LabelledTree t = parse_labelled_tree("1(2,3(4))");
  CHECK(t.shape == parse_tree("()(())"));
  CHECK(t.labels == std::vector<int>{1, 2, 3, 4});
  CHECK(render_labelled_tree(t) == "1(2,3(4))");
  CHECK(render_labelled_tree(parse_labelled_tree("1")) == "1");
  CHECK_THROWS_AS(parse_labelled_tree("1(2,2)"), ParseError);
  CHECK_THROWS_AS(parse_labelled_tree("1(2,4)"), ParseError);
  CHECK_THROWS_AS(parse_labelled_tree("1(2"), ParseError);
  CHECK_THROWS_AS(parse_labelled_tree("(2)"), ParseError);
}

TEST_CASE("match set text format") {
  MatchSet f = parse_match_set("4*>3,1>2");
  REQUIRE(f.size() == 2);
  CHECK(f.matches()[0].root.value == 1);
  CHECK(f.matches()[1].root.marked);
  CHECK(render_match_set(f) == "1>2,4*>3");
  CHECK_THROWS(parse_match_set("1>2,3>3"));
  CHECK_THROWS(parse_match_set("1>2,3>4"));   // 4 must be marked when n = 2
  CHECK_THROWS(parse_match_set("1>2,3*>4*"));  // 3 is unmarked
  CHECK_THROWS_AS(parse_match_set("1>"), ParseError);
}

TEST_CASE("enumeration counts") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::string> trees, sets;
    for_each_labelled_tree(n, [&](const LabelledTree& t) { trees.insert(render_labelled_tree(t)); });
    for_each_match_set(n, [&](const MatchSet& f) { sets.insert(render_match_set(f)); });
    CHECK(static_cast<long long>(trees.size()) == oracle::labelled_count(n));
    CHECK(sets.size() == oracle::match_set_count(n));
    CHECK(static_cast<long long>(sets.size()) == oracle::labelled_count(n));
  }
  CHECK(enumerate_match_sets(5).size() == 30240);
}

TEST_CASE("merge examples") {
  // T* rooted at the smallest marked label: horizontal
  CHECK(merged("1>2,4*>3") == "1(2,3)");
  // smallest marked label is a leaf: vertical
  CHECK(merged("1>2,3>4*") == "3(1(2))");
  CHECK(merged("2>1,3>4*") == "3(2(1))");
  CHECK(merged("1>2") == "1(2)");
  CHECK(merged("2>1") == "2(1)");
}

TEST_CASE("merge and decompose are inverse bijections with leaf transport") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::set<std::string> images;
    for_each_match_set(n, [&](const MatchSet& f) {
      LabelledTree t = merge(f);
      CHECK(t.edge_count() == n);
      CHECK(decompose(t) == f);
      CHECK(unmarked_leaves(t, n) == unmarked_leaf_count(f));
      images.insert(render_labelled_tree(t));
    });
    CHECK(static_cast<long long>(images.size()) == oracle::labelled_count(n));
    for_each_labelled_tree(n, [&](const LabelledTree& t) { CHECK(merge(decompose(t)) == t); });
  }
}

TEST_CASE("psi examples") {
  CHECK(psi_of("1(2,3)") == "3(1(2))");
  CHECK(psi_of("3(1(2))") == "1(2,3)");
  CHECK_THROWS_AS(psi(parse_labelled_tree("1(2)")), DomainError);
}

TEST_CASE("psi laws") {
  for (std::size_t n = 2; n <= 4; ++n) {
    long long fixed_domain = 0;
    for_each_labelled_tree(n, [&](const LabelledTree& t) {
      MatchSet f = decompose(t);
      bool all_pure = true;
      for (const auto& m : f.matches()) all_pure = all_pure && m.pure();
      if (all_pure) {
        ++fixed_domain;
        CHECK_THROWS_AS(psi(t), DomainError);
        return;
      }
      LabelledTree u = psi(t);
      CHECK(u != t);
      CHECK(psi(u) == t);
      CHECK(tree_stats(u.shape).leaves % 2 != tree_stats(t.shape).leaves % 2);
    });
    CHECK(Count(fixed_domain) == count_pure_sets(n));
  }
}

TEST_CASE("pure set counts") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(count_pure_sets(n) == count_pure_sets_by_enumeration(n));
  // n = 2m + 1 gives t_m t_{m+1}
  CHECK(count_pure_sets(1) == 2);
  CHECK(count_pure_sets(3) == 2 * 12);
  CHECK(count_pure_sets(5) == 12 * 120);
  CHECK(count_pure_sets(2) == 0);
}

TEST_CASE("decompose rejects the single vertex") {
  CHECK_THROWS_AS(decompose(parse_labelled_tree("1")), DomainError);
}

}  // TEST_SUITE
