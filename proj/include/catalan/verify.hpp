#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catalan/kernels.hpp"
#include "catalan/labelled.hpp"
#include "catalan/motzkin.hpp"
#include "catalan/phi.hpp"
#include "catalan/plane_tree.hpp"

namespace catalan {

using kernels::Execution;

// Exhaustive ranges accepted by the census and check operations.
namespace limits {
inline constexpr std::size_t kParityEdges = 16;
inline constexpr std::size_t kLabelledEdges = 6;
inline constexpr std::size_t kDeutschEdges = 12;
inline constexpr std::size_t kSunSemilength = 10;
inline constexpr std::size_t kPhiEdges = 12;
inline constexpr std::size_t kPsiEdges = 5;
inline constexpr std::size_t kUpsilonSize = 12;  // paths of length <= 11
inline constexpr std::size_t kPathLength = 13;
inline constexpr std::size_t kTreePathEdges = 12;
}  // namespace limits

// Signed leaf-parity (or path-statistic parity) tally against a closed form.
// For the Sun census, `row` holds T_{n,k} by k and even/odd split k by parity.
struct CensusReport {
  std::string kind;
  std::size_t n = 0;
  long long even = 0;
  long long odd = 0;
  long long total = 0;
  long long signed_sum = 0;
  long long expected = 0;
  long long expected_total = 0;
  std::vector<long long> row;
  bool pass = false;
  double wall_ms = 0;
};

// Two statistics over the same set compared as multisets.
struct DistributionReport {
  std::string kind;
  std::size_t n = 0;
  std::vector<long long> left;
  std::vector<long long> right;
  bool pass = false;
  double wall_ms = 0;
};

// Generic exhaustive (or sampled) contract check.
struct CheckReport {
  std::string name;
  std::size_t n = 0;
  std::string mode = "exhaustive";  // or "statistical"
  long long checked = 0;
  long long violations = 0;
  std::string counterexample;
  bool pass = false;
  double wall_ms = 0;
};

enum class InvolutionKind { Phi, Psi, Upsilon };

enum class Law : std::size_t {
  Involutive,
  ParityReversing,
  FixedPointFree,
  SizePreserving,
  CanonicalSite,  // the map acted where its rule says it should
};
inline constexpr std::size_t kLawCount = 5;

std::string_view law_name(Law law);
std::string_view involution_name(InvolutionKind kind);
std::optional<InvolutionKind> parse_involution_kind(std::string_view name);

struct InvolutionReport {
  InvolutionKind kind = InvolutionKind::Phi;
  std::size_t n = 0;
  long long domain_size = 0;
  long long excluded = 0;           // structures outside the domain (B_n, A_n, D_n)
  long long expected_excluded = 0;  // closed form for the excluded set
  std::array<long long, kLawCount> violations{};
  std::array<std::string, kLawCount> counterexample{};  // first in enumeration order
  double wall_ms = 0;

  bool pass() const;
};

// The three involutions as swappable callables, so the checker can be pointed at
// deliberately broken variants.
struct InvolutionMaps {
  std::function<PlaneTree(const PlaneTree&)> phi = [](const PlaneTree& t) { return catalan::phi(t); };
  std::function<LabelledTree(const LabelledTree&)> psi = [](const LabelledTree& t) { return catalan::psi(t); };
  std::function<TwoMotzkinPath(const TwoMotzkinPath&)> upsilon = [](const TwoMotzkinPath& p) {
    return catalan::upsilon(p);
  };
};

// Range violations throw std::out_of_range.
CensusReport parity_census(std::size_t n, Execution ex = Execution::Parallel);
// Survivors of phi: the signed sum over legal trees, an independent route to the same number.
CensusReport legal_survivor_census(std::size_t n, Execution ex = Execution::Parallel);
CensusReport labelled_parity_census(std::size_t n, Execution ex = Execution::Parallel);
// Sign of 1 + ups + wavies over paths of the given length.
CensusReport motzkin_census(std::size_t length, Execution ex = Execution::Parallel);
CensusReport sun_census(std::size_t semilength, Execution ex = Execution::Parallel);
DistributionReport deutsch_census(std::size_t n, Execution ex = Execution::Parallel);
// udu count over Dyck paths of semilength n versus wavy count over paths of length n - 1.
DistributionReport udu_wavy_census(std::size_t n, Execution ex = Execution::Parallel);

InvolutionReport check_involution(InvolutionKind kind, std::size_t n, const InvolutionMaps& maps = {},
                                  Execution ex = Execution::Parallel);

CheckReport check_tree_count(std::size_t n, Execution ex = Execution::Parallel);
CheckReport check_motzkin_count(std::size_t length, Execution ex = Execution::Parallel);
CheckReport check_dyck_count(std::size_t semilength, Execution ex = Execution::Parallel);
CheckReport check_match_set_count(std::size_t n);
CheckReport check_labelled_tree_count(std::size_t n);
// attach_leaves is injective on P_n with image the legal trees of P_{2n+1}; detach inverts it.
CheckReport check_legal_embedding(std::size_t n);
// Tree <-> path roundtrip, bijectivity and leaves - 1 = ups + wavies.
CheckReport check_tree_path_contract(std::size_t n, Execution ex = Execution::Parallel);
// Path <-> Dyck roundtrips in both directions for paths of length m.
CheckReport check_dyck_correspondence(std::size_t m);
// merge/decompose roundtrip both ways, bijectivity of merge and leaf transport.
CheckReport check_merge_roundtrip(std::size_t n);
// Seeded random match sets: roundtrip, leaf transport and psi laws.
CheckReport sampled_labelled_check(std::size_t n, std::size_t samples, std::uint64_t seed,
                                   const InvolutionMaps& maps = {});

struct Bounds {
  std::size_t trees = 0;     // counts and parity census
  std::size_t labelled = 0;  // labelled census
  std::size_t phi = 0;
  std::size_t psi = 0;       // psi laws and merge roundtrip
  std::size_t paths = 0;     // max path length for upsilon and the path census
  std::size_t sun = 0;
  std::size_t deutsch = 0;
  std::size_t tree_path = 0;
  std::size_t sampled = 0;   // largest labelled size checked by sampling (0 = none)
};

Bounds quick_bounds();
Bounds full_bounds();
// Caps every bound at `cap`.
Bounds capped(Bounds b, std::size_t cap);

struct VerifyReport {
  std::string mode;
  Bounds bounds;
  std::vector<CensusReport> censuses;
  std::vector<DistributionReport> distributions;
  std::vector<InvolutionReport> involutions;
  std::vector<CheckReport> checks;
  double wall_ms = 0;

  std::size_t failures() const;
};

struct VerifyOptions {
  std::string mode = "quick";  // quick | full
  std::optional<std::size_t> cap;
  Execution execution = Execution::Parallel;
  InvolutionMaps maps;
};

// Runs every census and check within the mode's bounds. Throws std::invalid_argument for
// an unknown mode.
VerifyReport full_verify(const VerifyOptions& options);

}  // namespace catalan
