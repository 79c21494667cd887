#include "catalan/report_json.hpp"

namespace catalan {

Json census_row_json(const CensusReport& r) {
  return Json{{"even", r.even}, {"odd", r.odd}, {"diff", r.signed_sum}, {"expected", r.expected}, {"pass", r.pass}};
}

Json sun_row_json(const CensusReport& r) {
  return Json{{"semilength", r.n}, {"row", r.row},           {"even", r.even}, {"odd", r.odd},
              {"diff", r.signed_sum}, {"expected", r.expected}, {"pass", r.pass}};
}

Json to_json(const CensusReport& r, bool timing) {
  Json j{{"kind", r.kind},
         {"n", r.n},
         {"even", r.even},
         {"odd", r.odd},
         {"total", r.total},
         {"diff", r.signed_sum},
         {"expected", r.expected},
         {"expected_total", r.expected_total}};
  if (!r.row.empty()) j["row"] = r.row;
  j["pass"] = r.pass;
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

Json to_json(const DistributionReport& r, bool timing) {
  Json j{{"kind", r.kind}, {"n", r.n}, {"left", r.left}, {"right", r.right}, {"pass", r.pass}};
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

Json to_json(const InvolutionReport& r, bool timing) {
  Json violations = Json::object();
  Json examples = Json::object();
  for (std::size_t i = 0; i < kLawCount; ++i) {
    const std::string name(law_name(static_cast<Law>(i)));
    violations[name] = r.violations[i];
    if (r.violations[i] > 0) examples[name] = r.counterexample[i];
  }
  Json j{{"map", std::string(involution_name(r.kind))},
         {"n", r.n},
         {"domain_size", r.domain_size},
         {"excluded", r.excluded},
         {"expected_excluded", r.expected_excluded},
         {"violations", violations},
         {"counterexamples", examples},
         {"pass", r.pass()}};
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

Json to_json(const CheckReport& r, bool timing) {
  Json j{{"name", r.name}, {"n", r.n}, {"mode", r.mode}, {"checked", r.checked}, {"violations", r.violations}};
  if (r.violations > 0) j["counterexample"] = r.counterexample;
  j["pass"] = r.pass;
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

Json to_json(const Bounds& b) {
  return Json{{"trees", b.trees}, {"labelled", b.labelled}, {"phi", b.phi},         {"psi", b.psi},
              {"paths", b.paths}, {"sun", b.sun},           {"deutsch", b.deutsch}, {"tree_path", b.tree_path},
              {"sampled", b.sampled}};
}

Json to_json(const VerifyReport& r, bool timing) {
  Json j{{"mode", r.mode}, {"bounds", to_json(r.bounds)}, {"failures", r.failures()}, {"pass", r.failures() == 0}};
  auto list = [&](const auto& items) {
    Json a = Json::array();
    for (const auto& x : items) a.push_back(to_json(x, timing));
    return a;
  };
  j["censuses"] = list(r.censuses);
  j["distributions"] = list(r.distributions);
  j["involutions"] = list(r.involutions);
  j["checks"] = list(r.checks);
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

std::string census_csv_header() { return "kind,n,even,odd,total,diff,expected,pass"; }

std::string census_csv_row(const CensusReport& r) {
  return r.kind + "," + std::to_string(r.n) + "," + std::to_string(r.even) + "," + std::to_string(r.odd) + "," +
         std::to_string(r.total) + "," + std::to_string(r.signed_sum) + "," + std::to_string(r.expected) + "," +
         (r.pass ? "true" : "false");
}

}  // namespace catalan
