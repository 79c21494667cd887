#include "catalan/phi.hpp"

#include <optional>
#include <string>

#include "catalan/errors.hpp"

namespace catalan {
namespace {

std::optional<IllegalVertexReport> search_below(const TreeLayout& l, std::size_t v) {
  const auto& kids = l.children[v];
  for (std::size_t i = kids.size(); i-- > 1;) {
    const std::size_t c = kids[i];
    if (l.is_leaf(c)) return IllegalVertexReport{{c}, IllegalCase::LeafNonFirstChild, {v}};
    if (auto found = search_below(l, c)) return found;
  }
  if (!kids.empty() && !l.is_leaf(kids.front()))
    return IllegalVertexReport{{kids.front()}, IllegalCase::InternalFirstChild, {v}};
  return std::nullopt;
}

IllegalVertexReport locate(const PlaneTree& t, const TreeLayout& l) {
  if (auto found = search_below(l, 0)) return *found;
  throw DomainError("tree has no illegal vertex: \"" + t.encoding() + "\"");
}

}  // namespace

IllegalVertexReport find_first_illegal(const PlaneTree& t) {
  return locate(t, TreeLayout::of(t));
}

TrackedImage phi_tracked(const PlaneTree& t) {
  const TreeLayout l = TreeLayout::of(t);
  const IllegalVertexReport r = locate(t, l);
  const std::size_t v = r.vertex.index;
  const std::size_t u = r.parent.index;

  auto kids = l.children;
  auto& siblings = kids[u];
  if (r.case_tag == IllegalCase::LeafNonFirstChild) {
    std::size_t pos = 0;
    while (siblings[pos] != v) ++pos;
    kids[v].assign(siblings.begin(), siblings.begin() + static_cast<std::ptrdiff_t>(pos));
    siblings.erase(siblings.begin(), siblings.begin() + static_cast<std::ptrdiff_t>(pos));
  } else {
    // v is siblings.front()
    siblings.insert(siblings.begin(), kids[v].begin(), kids[v].end());
    kids[v].clear();
  }

  std::vector<std::size_t> order;
  TrackedImage out{tree_from_adjacency(kids, 0, &order), std::vector<std::size_t>(order.size())};
  for (std::size_t i = 0; i < order.size(); ++i) out.moved_to[order[i]] = i;
  return out;
}

PlaneTree phi(const PlaneTree& t) { return phi_tracked(t).image; }

}  // namespace catalan
