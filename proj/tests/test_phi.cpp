#include "doctest.h"

#include <set>

#include "catalan/errors.hpp"
#include "catalan/phi.hpp"
#include "oracles.hpp"

using namespace catalan;

namespace {
std::string phi_of(const std::string& e) { return render_tree(phi(parse_tree(e))); }
}  // namespace

TEST_SUITE("involution_phi") {

TEST_CASE("hand traces") {
  CHECK(phi_of("(())") == "()()");
  CHECK(phi_of("()()") == "(())");
  CHECK(phi_of("(()())") == "()()()");
  CHECK(phi_of("()()()") == "(()())");
  CHECK(phi_of("((()))") == "(())()");
  CHECK(phi_of("(())()") == "((()))");
}

TEST_CASE("first illegal vertex") {
  auto r = find_first_illegal(parse_tree("(())()"));
  CHECK(r.vertex.index == 3);
  CHECK(r.case_tag == IllegalCase::LeafNonFirstChild);
  CHECK(r.parent.index == 0);
  r = find_first_illegal(parse_tree("((()))"));
  CHECK(r.vertex.index == 1);
  CHECK(r.case_tag == IllegalCase::InternalFirstChild);
  // last subtree is searched before the first child
  r = find_first_illegal(parse_tree("(())()(())"));
  CHECK(r.vertex.index == 3);
}

TEST_CASE("legal trees are outside the domain") {
  CHECK_THROWS_AS(phi(parse_tree("()")), DomainError);
  CHECK_THROWS_AS(phi(parse_tree("()(())")), DomainError);
  CHECK_THROWS_AS(phi(PlaneTree{}), DomainError);
  CHECK_THROWS_AS(find_first_illegal(parse_tree("()")), DomainError);
}

TEST_CASE("laws over every illegal tree") {
  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<std::string> images;
    long long illegal = 0;
    for (const auto& e : oracle::trees(n)) {
      if (oracle::legal(e)) continue;
      ++illegal;
      std::string img = phi_of(e);
      CHECK(img.size() == e.size());
      CHECK(img != e);
      CHECK(phi_of(img) == e);
      CHECK(oracle::leaves(img) % 2 != oracle::leaves(e) % 2);
      CHECK_FALSE(oracle::legal(img));
      images.insert(img);
    }
    CHECK(static_cast<long long>(images.size()) == illegal);
  }
}

TEST_CASE("the site stays put: same parent, case toggled") {
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& t : enumerate_plane_trees(n)) {
      if (is_legal_tree(t)) continue;
      auto before = find_first_illegal(t);
      auto tracked = phi_tracked(t);
      CHECK(tracked.image == phi(t));
      auto after = find_first_illegal(tracked.image);
      CHECK(after.parent == before.parent);
      CHECK(after.case_tag != before.case_tag);
      CHECK(tracked.moved_to[before.vertex.index] == after.vertex.index);
    }
}

TEST_CASE("tracking is a permutation of the vertices") {
  for (const auto& t : enumerate_plane_trees(6)) {
    if (is_legal_tree(t)) continue;
    auto tr = phi_tracked(t);
    REQUIRE(tr.moved_to.size() == t.vertex_count());
    std::set<std::size_t> seen(tr.moved_to.begin(), tr.moved_to.end());
    CHECK(seen.size() == t.vertex_count());
    CHECK(tr.moved_to[0] == 0);
  }
}

}  // TEST_SUITE
