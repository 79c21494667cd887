// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "catalan/counting.hpp"
#include "catalan/mutants.hpp"
#include "catalan/verify.hpp"

using namespace catalan;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (pass) note << " first failure: " << why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, Outcome& o, double seconds) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << "  (" << seconds << " s)"
            << o.note.str() << "\n";
  failures += !o.pass;
}

template <class Body>
void criterion(int id, const std::string& title, Body body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(id, title, o, s);
}

std::string first_counterexample(const InvolutionReport& r) {
  for (std::size_t k = 0; k < kLawCount; ++k)
    if (r.violations[k] > 0) return std::string(law_name(static_cast<Law>(k))) + ": " + r.counterexample[k];
  return {};
}

void check_laws(Outcome& o, InvolutionKind kind, std::size_t lo, std::size_t hi, const InvolutionMaps& maps) {
  for (std::size_t n = lo; n <= hi && o.pass; ++n) {
    InvolutionReport r = check_involution(kind, n, maps);
    if (!r.pass())
      o.fail(std::string(involution_name(kind)) + " n=" + std::to_string(n) + " " + first_counterexample(r));
    if (r.excluded != r.expected_excluded)
      o.fail(std::string(involution_name(kind)) + " n=" + std::to_string(n) + " excluded " +
             std::to_string(r.excluded) + " expected " + std::to_string(r.expected_excluded));
  }
}

void check_census(Outcome& o, const CensusReport& r) {
  if (!r.pass)
    o.fail(r.kind + " n=" + std::to_string(r.n) + " diff " + std::to_string(r.signed_sum) + " expected " +
           std::to_string(r.expected));
}

void check_value(Outcome& o, const std::string& what, long long got, long long want) {
  if (got != want) o.fail(what + " = " + std::to_string(got) + ", want " + std::to_string(want));
}

// Criteria 3, 5 and 6 restated against an arbitrary set of maps.
void phi_criterion(Outcome& o, const InvolutionMaps& maps) { check_laws(o, InvolutionKind::Phi, 1, 12, maps); }
void psi_criterion(Outcome& o, const InvolutionMaps& maps) { check_laws(o, InvolutionKind::Psi, 1, 5, maps); }
void upsilon_criterion(Outcome& o, const InvolutionMaps& maps) {
  check_laws(o, InvolutionKind::Upsilon, 1, 12, maps);
}

}  // namespace

int main() {
  std::cout.setf(std::ios::fixed);
  std::cout.precision(2);
  const InvolutionMaps real;

  criterion(1, "counting baselines", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t n = 1; n <= 14; ++n)
      if (auto r = check_tree_count(n); !r.pass) o.fail("tree count n=" + std::to_string(n));
    for (std::size_t m = 0; m <= 13; ++m)
      if (auto r = check_motzkin_count(m); !r.pass) o.fail("path count length=" + std::to_string(m));
    for (std::size_t n = 1; n <= 5; ++n)
      if (auto r = check_match_set_count(n); !r.pass) o.fail("match set count n=" + std::to_string(n));
    check_value(o, "c_14", to_int64(catalan_number(14)), 2674440);
    check_value(o, "|P_14|", check_tree_count(14).checked, 2674440);
    check_value(o, "|F_5|", check_match_set_count(5).checked, 30240);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= 120) o.fail("took " + std::to_string(s) + " s");
  });

  criterion(2, "parity census for plane trees, n <= 14", [](Outcome& o) {
    for (std::size_t n = 1; n <= 14; ++n) {
      CensusReport r = parity_census(n);
      check_census(o, r);
      if (n % 2 == 0) check_value(o, "diff n=" + std::to_string(n), r.signed_sum, 0);
    }
    check_value(o, "diff n=3", parity_census(3).signed_sum, 1);
    check_value(o, "diff n=5", parity_census(5).signed_sum, -2);
  });

  criterion(3, "phi laws, n <= 12", [&](Outcome& o) { phi_criterion(o, real); });

  criterion(4, "merge/decompose bijection with leaf transport, n <= 5", [](Outcome& o) {
    for (std::size_t n = 1; n <= 5; ++n) {
      CheckReport r = check_merge_roundtrip(n);
      if (!r.pass) o.fail("n=" + std::to_string(n) + " " + r.counterexample);
    }
    check_value(o, "structures at n=5", check_merge_roundtrip(5).checked, 2 * 30240);
  });

  criterion(5, "labelled parity census, n <= 6, with psi laws", [&](Outcome& o) {
    for (std::size_t n = 1; n <= 6; ++n) {
      CensusReport r = labelled_parity_census(n);
      check_census(o, r);
      if (n % 2 == 0) check_value(o, "diff n=" + std::to_string(n), r.signed_sum, 0);
    }
    check_value(o, "diff n=1", labelled_parity_census(1).signed_sum, -2);
    check_value(o, "diff n=3", labelled_parity_census(3).signed_sum, 24);
    const Count closed = -(labelled_tree_count(2) * labelled_tree_count(3));
    check_value(o, "diff n=5", labelled_parity_census(5).signed_sum, to_int64(closed));
    psi_criterion(o, real);
  });

  criterion(6, "upsilon laws, path length <= 11", [&](Outcome& o) { upsilon_criterion(o, real); });

  criterion(7, "tree/path contract, n <= 10", [](Outcome& o) {
    for (std::size_t n = 1; n <= 10; ++n)
      if (auto r = check_tree_path_contract(n); !r.pass) o.fail("n=" + std::to_string(n) + " " + r.counterexample);
  });

  criterion(8, "udu table, semilength <= 10", [](Outcome& o) {
    for (std::size_t s = 1; s <= 10; ++s) check_census(o, sun_census(s));
    if (sun_census(3).row != std::vector<long long>{2, 2, 1}) o.fail("row 3");
    check_value(o, "paths at semilength 10", sun_census(10).total, 16796);
  });

  criterion(9, "leaf / even-level equidistribution, n <= 10", [](Outcome& o) {
    for (std::size_t n = 1; n <= 10; ++n)
      if (!deutsch_census(n).pass) o.fail("n=" + std::to_string(n));
  });

  criterion(10, "mutation sensitivity", [](Outcome& o) {
    struct Case {
      std::string name;
      void (*criterion)(Outcome&, const InvolutionMaps&);
    };
    const std::vector<Case> cases{
        {"upsilon-last", upsilon_criterion}, {"phi-skip-case2", phi_criterion}, {"psi-pure", psi_criterion}};
    for (const auto& c : cases) {
      Outcome m;
      c.criterion(m, *mutants::maps_with(c.name));
      if (m.pass)
        o.fail(c.name + " survived");
      else
        o.note << "\n      " << c.name << " caught:" << m.note.str();
    }
  });

  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures;
}
