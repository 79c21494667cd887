#include "catalan/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "catalan/counting.hpp"

namespace catalan {
namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_range(const char* what, std::size_t n, std::size_t lo, std::size_t hi) {
  if (n < lo || n > hi)
    throw std::out_of_range(std::string(what) + ": size " + std::to_string(n) + " outside " + std::to_string(lo) +
                            ".." + std::to_string(hi));
}

long long catalan64(std::size_t n) { return to_int64(catalan_number(static_cast<unsigned>(n))); }

// (-1)^{m+1} c_m for odd n = 2m + 1, zero for even n.
long long signed_tree_expectation(std::size_t n) {
  if (n % 2 == 0) return 0;
  const std::size_t m = (n - 1) / 2;
  return (m % 2 == 0 ? -1 : 1) * catalan64(m);
}

long long legal_tree_count(std::size_t n) { return n % 2 == 0 ? 0 : catalan64((n - 1) / 2); }

CensusReport census_from(std::string kind, std::size_t n, const kernels::ParityTally& t, long long expected,
                         long long expected_total, const Stopwatch& sw) {
  CensusReport r;
  r.kind = std::move(kind);
  r.n = n;
  r.even = t.even;
  r.odd = t.odd;
  r.total = t.total();
  r.signed_sum = t.signed_sum();
  r.expected = expected;
  r.expected_total = expected_total;
  r.pass = r.signed_sum == expected && r.total == expected_total;
  r.wall_ms = sw.ms();
  return r;
}

// Accumulates law violations; keeps the first counterexample per law in enumeration order.
struct LawTally {
  long long domain = 0;
  long long excluded = 0;
  std::array<long long, kLawCount> violations{};
  std::array<std::string, kLawCount> example{};

  void flag(Law law, const std::string& what) {
    const auto i = static_cast<std::size_t>(law);
    if (violations[i]++ == 0) example[i] = what;
  }
  void merge(const LawTally& o) {
    domain += o.domain;
    excluded += o.excluded;
    for (std::size_t i = 0; i < kLawCount; ++i) {
      if (violations[i] == 0 && o.violations[i] > 0) example[i] = o.example[i];
      violations[i] += o.violations[i];
    }
  }
};

struct CheckTally {
  long long checked = 0;
  long long violations = 0;
  std::string example;

  void ok() { ++checked; }
  void fail(const std::string& what) {
    ++checked;
    if (violations++ == 0) example = what;
  }
  void expect(bool cond, const std::string& what) { cond ? ok() : fail(what); }
  void merge(const CheckTally& o) {
    checked += o.checked;
    if (violations == 0 && o.violations > 0) example = o.example;
    violations += o.violations;
  }
};

CheckReport check_from(std::string name, std::size_t n, const CheckTally& t, const Stopwatch& sw,
                       std::string mode = "exhaustive") {
  CheckReport r;
  r.name = std::move(name);
  r.n = n;
  r.mode = std::move(mode);
  r.checked = t.checked;
  r.violations = t.violations;
  r.counterexample = t.example;
  r.pass = t.violations == 0;
  r.wall_ms = sw.ms();
  return r;
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// ---- involution visitors ----

void visit_phi(LawTally& acc, const PlaneTree& t, const InvolutionMaps& maps) {
  if (is_legal_tree(t)) {
    ++acc.excluded;
    return;
  }
  ++acc.domain;
  const std::string x = quoted(t.encoding());
  PlaneTree image;
  try {
    image = maps.phi(t);
  } catch (const std::exception& e) {
    acc.flag(Law::Involutive, x + " -> error: " + e.what());
    return;
  }
  const std::string arrow = x + " -> " + quoted(image.encoding());
  bool well_formed = true;
  try {
    parse_tree(image.encoding());
  } catch (const std::exception&) {
    well_formed = false;
  }
  if (!well_formed || image.edge_count() != t.edge_count()) {
    acc.flag(Law::SizePreserving, arrow);
    return;
  }
  if (tree_stats(image).sign != -tree_stats(t).sign) acc.flag(Law::ParityReversing, arrow);
  if (image == t) acc.flag(Law::FixedPointFree, arrow);
  try {
    const PlaneTree back = maps.phi(image);
    if (back != t) acc.flag(Law::Involutive, arrow + " -> " + quoted(back.encoding()));
  } catch (const std::exception& e) {
    acc.flag(Law::Involutive, arrow + " -> error: " + e.what());
  }
  // the surgery keeps the searched vertex first: same parent, case toggled
  try {
    const IllegalVertexReport before = find_first_illegal(t);
    const IllegalVertexReport after = find_first_illegal(image);
    if (after.parent != before.parent || after.case_tag == before.case_tag) acc.flag(Law::CanonicalSite, arrow);
  } catch (const std::exception&) {
    acc.flag(Law::CanonicalSite, arrow + " (image has no illegal vertex)");
  }
}

std::size_t chosen_mixed_match(const MatchSet& f) {
  std::size_t chosen = f.size();
  int best = 0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const Match& m = f.matches()[k];
    if (m.pure()) continue;
    const int unmarked = m.root.marked ? m.leaf.value : m.root.value;
    if (chosen == f.size() || unmarked < best) {
      chosen = k;
      best = unmarked;
    }
  }
  return chosen;
}

bool is_label_permutation(const LabelledTree& t) {
  std::vector<int> sorted = t.labels;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i + 1)) return false;
  return sorted.size() == t.shape.vertex_count();
}

void visit_psi(LawTally& acc, const LabelledTree& t, const InvolutionMaps& maps) {
  const MatchSet f = decompose(t);
  const std::size_t chosen = chosen_mixed_match(f);
  if (chosen == f.size()) {
    ++acc.excluded;
    return;
  }
  ++acc.domain;
  const std::string x = render_labelled_tree(t);
  LabelledTree image;
  try {
    image = maps.psi(t);
  } catch (const std::exception& e) {
    acc.flag(Law::Involutive, x + " -> error: " + e.what());
    return;
  }
  const std::string arrow = x + " -> " + render_labelled_tree(image);
  if (image.edge_count() != t.edge_count() || !is_label_permutation(image)) {
    acc.flag(Law::SizePreserving, arrow);
    return;
  }
  if (tree_stats(image.shape).sign != -tree_stats(t.shape).sign) acc.flag(Law::ParityReversing, arrow);
  if (image == t) acc.flag(Law::FixedPointFree, arrow);
  try {
    const LabelledTree back = maps.psi(image);
    if (back != t) acc.flag(Law::Involutive, arrow + " -> " + render_labelled_tree(back));
  } catch (const std::exception& e) {
    acc.flag(Law::Involutive, arrow + " -> error: " + e.what());
  }
  // exactly the chosen match is turned upside down
  std::vector<Match> expected = f.matches();
  expected[chosen] = expected[chosen].flipped();
  if (decompose(image) != MatchSet(std::move(expected)))
    acc.flag(Law::CanonicalSite, arrow + " (decomposition " + render_match_set(f) + ")");
}

void visit_upsilon(LawTally& acc, const TwoMotzkinPath& p, const InvolutionMaps& maps) {
  const std::size_t first_level = p.steps().find_first_of("SW");
  if (first_level == std::string::npos) {
    ++acc.excluded;
    return;
  }
  ++acc.domain;
  const std::string x = quoted(p.steps());
  TwoMotzkinPath image;
  try {
    image = maps.upsilon(p);
  } catch (const std::exception& e) {
    acc.flag(Law::Involutive, x + " -> error: " + e.what());
    return;
  }
  const std::string arrow = x + " -> " + quoted(image.steps());
  bool well_formed = true;
  try {
    parse_path(image.steps());
  } catch (const std::exception&) {
    well_formed = false;
  }
  if (!well_formed || image.length() != p.length()) {
    acc.flag(Law::SizePreserving, arrow);
    return;
  }
  if (path_stats(image).sign != -path_stats(p).sign) acc.flag(Law::ParityReversing, arrow);
  if (image == p) acc.flag(Law::FixedPointFree, arrow);
  try {
    const TwoMotzkinPath back = maps.upsilon(image);
    if (back != p) acc.flag(Law::Involutive, arrow + " -> " + quoted(back.steps()));
  } catch (const std::exception& e) {
    acc.flag(Law::Involutive, arrow + " -> error: " + e.what());
  }
  // only the first level step changes, and it changes kind
  std::string expected = p.steps();
  expected[first_level] = expected[first_level] == 'S' ? 'W' : 'S';
  if (image.steps() != expected) acc.flag(Law::CanonicalSite, arrow);
}

}  // namespace

// ---- names ----

std::string_view law_name(Law law) {
  switch (law) {
    case Law::Involutive: return "involutive";
    case Law::ParityReversing: return "parity_reversing";
    case Law::FixedPointFree: return "fixed_point_free";
    case Law::SizePreserving: return "size_preserving";
    case Law::CanonicalSite: return "canonical_site";
  }
  return "?";
}

std::string_view involution_name(InvolutionKind kind) {
  switch (kind) {
    case InvolutionKind::Phi: return "phi";
    case InvolutionKind::Psi: return "psi";
    case InvolutionKind::Upsilon: return "upsilon";
  }
  return "?";
}

std::optional<InvolutionKind> parse_involution_kind(std::string_view name) {
  if (name == "phi") return InvolutionKind::Phi;
  if (name == "psi") return InvolutionKind::Psi;
  if (name == "upsilon") return InvolutionKind::Upsilon;
  return std::nullopt;
}

bool InvolutionReport::pass() const {
  return excluded == expected_excluded &&
         std::all_of(violations.begin(), violations.end(), [](long long v) { return v == 0; });
}

// ---- censuses ----

CensusReport parity_census(std::size_t n, Execution ex) {
  require_range("parity census", n, 1, limits::kParityEdges);
  Stopwatch sw;
  return census_from("parity", n, kernels::tree_leaf_parity(n, ex), signed_tree_expectation(n), catalan64(n), sw);
}

CensusReport legal_survivor_census(std::size_t n, Execution ex) {
  require_range("legal survivor census", n, 1, limits::kParityEdges);
  Stopwatch sw;
  return census_from("legal_survivors", n, kernels::legal_tree_leaf_parity(n, ex), signed_tree_expectation(n),
                     legal_tree_count(n), sw);
}

CensusReport labelled_parity_census(std::size_t n, Execution ex) {
  require_range("labelled census", n, 1, limits::kLabelledEdges);
  Stopwatch sw;
  long long expected = 0;
  if (n % 2 == 1) {
    const std::size_t m = (n - 1) / 2;
    expected = (m % 2 == 0 ? -1 : 1) * to_int64(count_pure_sets(n));
  }
  return census_from("labelled", n, kernels::labelled_leaf_parity(n, ex), expected,
                     to_int64(labelled_tree_count(static_cast<unsigned>(n))), sw);
}

CensusReport motzkin_census(std::size_t length, Execution ex) {
  require_range("path census", length, 0, limits::kPathLength);
  Stopwatch sw;
  // same numbers as the tree census with n = length + 1 edges
  return census_from("motzkin", length, kernels::path_statistic_parity(length, ex),
                     signed_tree_expectation(length + 1), catalan64(length + 1), sw);
}

CensusReport sun_census(std::size_t semilength, Execution ex) {
  require_range("sun census", semilength, 1, limits::kSunSemilength);
  Stopwatch sw;
  const kernels::Histogram row = kernels::udu_row(semilength, ex);
  kernels::ParityTally t;
  for (std::size_t k = 0; k < row.counts.size(); ++k) t.add(k % 2 == 0, row.counts[k]);
  const long long correction = semilength % 2 == 1 ? catalan64((semilength - 1) / 2) : 0;
  CensusReport r = census_from("sun", semilength, t, correction, catalan64(semilength), sw);
  r.row = row.counts;
  return r;
}

DistributionReport deutsch_census(std::size_t n, Execution ex) {
  require_range("deutsch census", n, 1, limits::kDeutschEdges);
  Stopwatch sw;
  const auto h = kernels::tree_leaf_and_level_histograms(n, ex);
  DistributionReport r{"deutsch", n, h.leaves.counts, h.even_level.counts, h.leaves == h.even_level, 0};
  r.wall_ms = sw.ms();
  return r;
}

DistributionReport udu_wavy_census(std::size_t n, Execution ex) {
  require_range("udu/wavy census", n, 1, limits::kSunSemilength);
  Stopwatch sw;
  const auto udu = kernels::udu_row(n, ex);
  const auto wavy = kernels::path_wavy_histogram(n - 1, ex);
  DistributionReport r{"udu_wavy", n, udu.counts, wavy.counts, udu == wavy, 0};
  r.wall_ms = sw.ms();
  return r;
}

// ---- involutions ----

InvolutionReport check_involution(InvolutionKind kind, std::size_t n, const InvolutionMaps& maps, Execution ex) {
  Stopwatch sw;
  LawTally tally;
  InvolutionReport r;
  r.kind = kind;
  r.n = n;
  switch (kind) {
    case InvolutionKind::Phi:
      require_range("phi check", n, 1, limits::kPhiEdges);
      tally = kernels::reduce_words<LawTally>(
          StepAlphabet::parentheses(), 2 * n,
          [&](LawTally& acc, std::string_view w) {
            visit_phi(acc, PlaneTree::from_trusted_encoding(std::string(w)), maps);
          },
          ex);
      r.expected_excluded = legal_tree_count(n);
      break;
    case InvolutionKind::Psi:
      require_range("psi check", n, 1, limits::kPsiEdges);
      tally = kernels::reduce_words<LawTally>(
          StepAlphabet::parentheses(), 2 * n,
          [&](LawTally& acc, std::string_view w) {
            const PlaneTree shape = PlaneTree::from_trusted_encoding(std::string(w));
            std::vector<int> labels(n + 1);
            std::iota(labels.begin(), labels.end(), 1);
            do {
              visit_psi(acc, LabelledTree{shape, labels}, maps);
            } while (std::next_permutation(labels.begin(), labels.end()));
          },
          ex);
      r.expected_excluded = to_int64(count_pure_sets(n));
      break;
    case InvolutionKind::Upsilon:
      require_range("upsilon check", n, 1, limits::kUpsilonSize);
      tally = kernels::reduce_words<LawTally>(
          StepAlphabet::two_motzkin(), n - 1,
          [&](LawTally& acc, std::string_view w) {
            visit_upsilon(acc, TwoMotzkinPath::from_trusted(std::string(w)), maps);
          },
          ex);
      r.expected_excluded = (n - 1) % 2 == 0 ? catalan64((n - 1) / 2) : 0;
      break;
  }
  r.domain_size = tally.domain;
  r.excluded = tally.excluded;
  r.violations = tally.violations;
  r.counterexample = tally.example;
  r.wall_ms = sw.ms();
  return r;
}

// ---- contract checks ----

namespace {

CheckReport word_count_check(std::string name, const StepAlphabet& a, std::size_t length, std::size_t n,
                             long long expected, Execution ex) {
  Stopwatch sw;
  const kernels::WordCount c = kernels::count_words(a, length, ex);
  CheckTally t;
  if (c.count != expected)
    t.fail("enumerated " + std::to_string(c.count) + ", expected " + std::to_string(expected));
  if (c.out_of_order > 0) t.fail(std::to_string(c.out_of_order) + " adjacent pairs out of order");
  t.checked = c.count;
  return check_from(std::move(name), n, t, sw);
}

}  // namespace

CheckReport check_tree_count(std::size_t n, Execution ex) {
  require_range("tree count", n, 0, limits::kParityEdges);
  return word_count_check("count_trees", StepAlphabet::parentheses(), 2 * n, n, catalan64(n), ex);
}

CheckReport check_motzkin_count(std::size_t length, Execution ex) {
  require_range("path count", length, 0, limits::kPathLength);
  return word_count_check("count_motzkin", StepAlphabet::two_motzkin(), length, length, catalan64(length + 1), ex);
}

CheckReport check_dyck_count(std::size_t semilength, Execution ex) {
  require_range("dyck count", semilength, 0, limits::kParityEdges);
  return word_count_check("count_dyck", StepAlphabet::dyck(), 2 * semilength, semilength, catalan64(semilength), ex);
}

CheckReport check_match_set_count(std::size_t n) {
  require_range("match set count", n, 1, limits::kPsiEdges + 1);
  Stopwatch sw;
  std::set<std::string> seen;
  CheckTally t;
  for_each_match_set(n, [&](const MatchSet& f) {
    const std::string s = render_match_set(f);
    t.expect(seen.insert(s).second, "duplicate " + s);
  });
  const long long expected = to_int64(labelled_tree_count(static_cast<unsigned>(n)));
  if (t.checked != expected) {
    const long long c = t.checked;
    t.fail("enumerated " + std::to_string(c) + ", expected " + std::to_string(expected));
    t.checked = c;
  }
  return check_from("count_match_sets", n, t, sw);
}

CheckReport check_labelled_tree_count(std::size_t n) {
  require_range("labelled tree count", n, 1, limits::kLabelledEdges);
  Stopwatch sw;
  CheckTally t;
  std::optional<LabelledTree> prev;
  for_each_labelled_tree(n, [&](const LabelledTree& x) {
    t.expect(!prev || *prev < x, "not strictly increasing at " + render_labelled_tree(x));
    prev = x;
  });
  const long long expected = to_int64(labelled_tree_count(static_cast<unsigned>(n)));
  if (t.checked != expected) {
    const long long c = t.checked;
    t.fail("enumerated " + std::to_string(c) + ", expected " + std::to_string(expected));
    t.checked = c;
  }
  return check_from("count_labelled_trees", n, t, sw);
}

CheckReport check_legal_embedding(std::size_t n) {
  require_range("legal embedding", n, 0, (limits::kParityEdges - 1) / 2);
  Stopwatch sw;
  CheckTally t;
  std::set<std::string> images;
  for_each_plane_tree(n, [&](const PlaneTree& x) {
    const PlaneTree b = attach_leaves(x);
    const std::string arrow = quoted(x.encoding()) + " -> " + quoted(b.encoding());
    t.expect(b.edge_count() == 2 * n + 1, arrow + " has the wrong size");
    t.expect(is_legal_tree(b), arrow + " is not legal");
    t.expect(tree_stats(b).leaves == n + 1, arrow + " does not have n + 1 leaves");
    t.expect(images.insert(b.encoding()).second, arrow + " collides");
    t.expect(is_legal_tree(b) && detach_leaves(b) == x, arrow + " does not detach back");
  });
  long long legal = 0;
  for_each_plane_tree(2 * n + 1, [&](const PlaneTree& b) {
    if (!is_legal_tree(b)) return;
    ++legal;
    t.expect(images.count(b.encoding()) == 1, quoted(b.encoding()) + " is legal but not an image");
  });
  t.expect(legal == catalan64(n), std::to_string(legal) + " legal trees, expected " + std::to_string(catalan64(n)));
  return check_from("legal_embedding", n, t, sw);
}

CheckReport check_tree_path_contract(std::size_t n, Execution ex) {
  require_range("tree/path contract", n, 1, limits::kTreePathEdges);
  Stopwatch sw;
  CheckTally t = kernels::reduce_words<CheckTally>(
      StepAlphabet::parentheses(), 2 * n,
      [n](CheckTally& acc, std::string_view w) {
        const PlaneTree x = PlaneTree::from_trusted_encoding(std::string(w));
        const TwoMotzkinPath p = tree_to_motzkin(x);
        const std::string arrow = quoted(x.encoding()) + " -> " + quoted(p.steps());
        bool ok = p.length() == n - 1;
        try {
          parse_path(p.steps());
        } catch (const std::exception&) {
          ok = false;
        }
        if (!ok) return acc.fail(arrow + " is not a path of length n - 1");
        const PathStats s = path_stats(p);
        if (tree_stats(x).leaves - 1 != s.ups + s.wavies) return acc.fail(arrow + " breaks leaves - 1 = ups + wavies");
        acc.expect(motzkin_to_tree(p) == x, arrow + " does not map back");
      },
      ex);
  t.merge(kernels::reduce_words<CheckTally>(
      StepAlphabet::two_motzkin(), n - 1,
      [n](CheckTally& acc, std::string_view w) {
        const TwoMotzkinPath p = TwoMotzkinPath::from_trusted(std::string(w));
        const PlaneTree x = motzkin_to_tree(p);
        const std::string arrow = quoted(p.steps()) + " -> " + quoted(x.encoding());
        bool ok = x.edge_count() == n;
        try {
          parse_tree(x.encoding());
        } catch (const std::exception&) {
          ok = false;
        }
        if (!ok) return acc.fail(arrow + " is not a tree with n edges");
        acc.expect(tree_to_motzkin(x) == p, arrow + " does not map back");
      },
      ex));
  return check_from("tree_path_contract", n, t, sw);
}

CheckReport check_dyck_correspondence(std::size_t m) {
  require_range("dyck correspondence", m, 0, limits::kPathLength);
  Stopwatch sw;
  CheckTally t;
  for_each_motzkin(m, [&](const TwoMotzkinPath& p) {
    const DyckPath d = motzkin_to_dyck(p);
    const std::string arrow = quoted(p.steps()) + " -> " + quoted(d.steps());
    bool ok = d.semilength() == m + 1 && d.length() % 2 == 0;
    try {
      parse_dyck(d.steps());
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) return t.fail(arrow + " is not a Dyck path of semilength m + 1");
    t.expect(dyck_to_motzkin(d) == p, arrow + " does not map back");
  });
  for_each_dyck(m + 1, [&](const DyckPath& d) {
    const TwoMotzkinPath p = dyck_to_motzkin(d);
    const std::string arrow = quoted(d.steps()) + " -> " + quoted(p.steps());
    bool ok = p.length() == m;
    try {
      parse_path(p.steps());
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) return t.fail(arrow + " is not a path of length m");
    t.expect(motzkin_to_dyck(p) == d, arrow + " does not map back");
  });
  return check_from("dyck_correspondence", m, t, sw);
}

CheckReport check_merge_roundtrip(std::size_t n) {
  require_range("merge roundtrip", n, 1, limits::kPsiEdges + 1);
  Stopwatch sw;
  CheckTally t;
  std::set<std::string> images;
  for_each_match_set(n, [&](const MatchSet& f) {
    const LabelledTree x = merge(f);
    const std::string arrow = render_match_set(f) + " -> " + render_labelled_tree(x);
    const MatchSet back = decompose(x);
    if (!images.insert(render_labelled_tree(x)).second)
      t.fail(arrow + " collides");
    else if (tree_stats(x.shape).leaves != unmarked_leaf_count(f))
      t.fail(arrow + " breaks leaf transport");
    else
      t.expect(back == f, arrow + " -> " + render_match_set(back));
  });
  for_each_labelled_tree(n, [&](const LabelledTree& x) {
    const MatchSet f = decompose(x);
    const LabelledTree back = merge(f);
    t.expect(back == x, render_labelled_tree(x) + " -> " + render_match_set(f) + " -> " + render_labelled_tree(back));
  });
  return check_from("merge_roundtrip", n, t, sw);
}

CheckReport sampled_labelled_check(std::size_t n, std::size_t samples, std::uint64_t seed,
                                   const InvolutionMaps& maps) {
  if (n == 0) throw std::out_of_range("sampled check: size must be at least 1");
  Stopwatch sw;
  CheckTally t;
  std::mt19937_64 rng(seed);
  std::vector<int> values(2 * n);
  for (std::size_t s = 0; s < samples; ++s) {
    std::iota(values.begin(), values.end(), 1);
    std::shuffle(values.begin(), values.end(), rng);
    std::vector<Match> ms;
    for (std::size_t k = 0; k < n; ++k) {
      const Label a{values[2 * k], static_cast<std::size_t>(values[2 * k]) >= n + 2};
      const Label b{values[2 * k + 1], static_cast<std::size_t>(values[2 * k + 1]) >= n + 2};
      ms.push_back({a, b});
    }
    const MatchSet f(std::move(ms));
    const LabelledTree x = merge(f);
    const std::string arrow = render_match_set(f) + " -> " + render_labelled_tree(x);
    t.expect(decompose(x) == f, arrow + " does not decompose back");
    t.expect(tree_stats(x.shape).leaves == unmarked_leaf_count(f), arrow + " breaks leaf transport");
    if (chosen_mixed_match(f) == f.size()) continue;
    LawTally laws;
    visit_psi(laws, x, maps);
    for (std::size_t i = 0; i < kLawCount; ++i)
      if (laws.violations[i] > 0)
        t.fail(std::string(law_name(static_cast<Law>(i))) + ": " + laws.example[i]);
  }
  return check_from("sampled_labelled", n, t, sw, "statistical");
}

// ---- aggregate ----

Bounds quick_bounds() {
  Bounds b;
  b.trees = 10;
  b.labelled = 4;
  b.phi = 8;
  b.psi = 4;
  b.paths = 8;
  b.sun = 8;
  b.deutsch = 8;
  b.tree_path = 8;
  b.sampled = 0;
  return b;
}

Bounds full_bounds() {
  Bounds b;
  b.trees = 14;
  b.labelled = 6;
  b.phi = 12;
  b.psi = 5;
  b.paths = 11;
  b.sun = 10;
  b.deutsch = 12;
  b.tree_path = 10;
  b.sampled = 7;
  return b;
}

Bounds capped(Bounds b, std::size_t cap) {
  for (std::size_t* f : {&b.trees, &b.labelled, &b.phi, &b.psi, &b.paths, &b.sun, &b.deutsch, &b.tree_path, &b.sampled})
    *f = std::min(*f, cap);
  return b;
}

std::size_t VerifyReport::failures() const {
  std::size_t f = 0;
  for (const auto& r : censuses) f += !r.pass;
  for (const auto& r : distributions) f += !r.pass;
  for (const auto& r : involutions) f += !r.pass();
  for (const auto& r : checks) f += !r.pass;
  return f;
}

VerifyReport full_verify(const VerifyOptions& o) {
  Stopwatch sw;
  VerifyReport r;
  r.mode = o.mode;
  if (o.mode == "quick")
    r.bounds = quick_bounds();
  else if (o.mode == "full")
    r.bounds = full_bounds();
  else
    throw std::invalid_argument("unknown verify mode '" + o.mode + "' (expected quick or full)");
  if (o.cap) r.bounds = capped(r.bounds, *o.cap);
  const Bounds& b = r.bounds;
  const Execution ex = o.execution;

  for (std::size_t n = 1; n <= b.trees; ++n) r.checks.push_back(check_tree_count(n, ex));
  for (std::size_t m = 0; m + 1 <= b.trees; ++m) r.checks.push_back(check_motzkin_count(m, ex));
  for (std::size_t s = 1; s <= b.sun; ++s) r.checks.push_back(check_dyck_count(s, ex));
  for (std::size_t n = 1; n <= b.psi; ++n) {
    r.checks.push_back(check_match_set_count(n));
    r.checks.push_back(check_labelled_tree_count(n));
  }

  for (std::size_t n = 1; n <= b.trees; ++n) {
    r.censuses.push_back(parity_census(n, ex));
    r.censuses.push_back(legal_survivor_census(n, ex));
  }
  for (std::size_t n = 0; 2 * n + 1 <= b.phi; ++n) r.checks.push_back(check_legal_embedding(n));
  for (std::size_t n = 1; n <= b.phi; ++n) r.involutions.push_back(check_involution(InvolutionKind::Phi, n, o.maps, ex));

  for (std::size_t n = 1; n <= b.psi; ++n) {
    r.checks.push_back(check_merge_roundtrip(n));
    r.involutions.push_back(check_involution(InvolutionKind::Psi, n, o.maps, ex));
  }
  for (std::size_t n = 1; n <= b.labelled; ++n) r.censuses.push_back(labelled_parity_census(n, ex));
  for (std::size_t n = b.psi + 1; n <= b.sampled; ++n)
    r.checks.push_back(sampled_labelled_check(n, 500, 0x5eed0000u + n, o.maps));

  for (std::size_t m = 0; m <= b.paths; ++m) {
    r.involutions.push_back(check_involution(InvolutionKind::Upsilon, m + 1, o.maps, ex));
    r.censuses.push_back(motzkin_census(m, ex));
  }
  for (std::size_t n = 1; n <= b.tree_path; ++n) r.checks.push_back(check_tree_path_contract(n, ex));
  for (std::size_t m = 0; m + 1 <= std::min(b.paths, b.sun); ++m) r.checks.push_back(check_dyck_correspondence(m));

  for (std::size_t s = 1; s <= b.sun; ++s) r.censuses.push_back(sun_census(s, ex));
  for (std::size_t s = 1; s < b.sun; ++s) r.distributions.push_back(udu_wavy_census(s, ex));
  for (std::size_t n = 1; n <= b.deutsch; ++n) r.distributions.push_back(deutsch_census(n, ex));

  r.wall_ms = sw.ms();
  return r;
}

}  // namespace catalan
