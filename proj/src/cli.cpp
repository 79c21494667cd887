#include "catalan/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "catalan/errors.hpp"
#include "catalan/mutants.hpp"
#include "catalan/report_json.hpp"
#include "catalan/verify.hpp"

namespace catalan {
namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> read_inputs(const std::vector<std::string>& positional, std::istream& in) {
  if (!positional.empty()) return positional;
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

// ---- enumerate ----

struct EnumerateArgs {
  std::string kind;
  std::size_t n = 0;
  std::string prefix;
  std::string format = "plain";
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
  std::size_t index = 0;
  Json array = Json::array();
  if (a.format == "csv") out << "index,encoding\n";
  auto emit = [&](const std::string& s) {
    if (a.format == "json")
      array.push_back(s);
    else if (a.format == "csv")
      out << index << "," << s << "\n";
    else
      out << s << "\n";
    ++index;
  };
  if (a.kind == "tree") {
    for_each_plane_tree(a.n, [&](const PlaneTree& t) { emit(render_tree(t)); }, a.prefix);
  } else if (a.kind == "motzkin") {
    for_each_motzkin(a.n, [&](const TwoMotzkinPath& p) { emit(render_path(p)); }, a.prefix);
  } else if (a.kind == "dyck") {
    for_each_dyck(a.n, [&](const DyckPath& d) { emit(render_dyck(d)); }, a.prefix);
  } else if (a.kind == "ltree") {
    for_each_labelled_tree(a.n, [&](const LabelledTree& t) { emit(render_labelled_tree(t)); }, a.prefix);
  } else {
    for_each_match_set(a.n, [&](const MatchSet& f) { emit(render_match_set(f)); });
  }
  if (a.format == "json") out << array.dump() << "\n";
  return kOk;
}

// ---- stats ----

Json stats_of(const std::string& kind, const std::string& text) {
  if (kind == "tree" || kind == "ltree") {
    const PlaneTree shape = kind == "tree" ? parse_tree(text) : parse_labelled_tree(text).shape;
    const TreeStats s = tree_stats(shape);
    return Json{{"leaves", s.leaves}, {"even_level", s.even_level}, {"sign", s.sign}};
  }
  if (kind == "motzkin") {
    const PathStats s = path_stats(parse_path(text));
    return Json{{"ups", s.ups}, {"wavies", s.wavies}, {"statistic", s.statistic}, {"sign", s.sign}};
  }
  const DyckPath d = parse_dyck(text);
  return Json{{"semilength", d.semilength()}, {"udu", udu_count(d)}};
}

int cmd_stats(const std::string& kind, const std::vector<std::string>& inputs, const std::string& format,
              std::ostream& out, std::ostream& err) {
  int code = kOk;
  bool header = false;
  for (const auto& text : inputs) {
    Json s;
    try {
      s = stats_of(kind, text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << " (input \"" << text << "\")\n";
      code = kFailure;
      continue;
    }
    if (format == "json") {
      Json row{{"input", text}};
      row.update(s);
      out << row.dump() << "\n";
    } else if (format == "csv") {
      if (!header) {
        out << "input";
        for (auto it = s.begin(); it != s.end(); ++it) out << "," << it.key();
        out << "\n";
        header = true;
      }
      out << text;
      for (auto it = s.begin(); it != s.end(); ++it) out << "," << it.value().dump();
      out << "\n";
    } else {
      bool first = true;
      for (auto it = s.begin(); it != s.end(); ++it) {
        out << (first ? "" : " ") << it.key() << "=";
        if (it.key() == "sign")
          out << sign_text(it.value().get<int>());
        else
          out << it.value().dump();
        first = false;
      }
      out << "\n";
    }
  }
  return code;
}

// ---- apply ----

using Mapper = std::function<std::string(const std::string&)>;

const std::map<std::string, Mapper>& mappers() {
  static const std::map<std::string, Mapper> m = {
      {"phi", [](const std::string& s) { return render_tree(phi(parse_tree(s))); }},
      {"psi", [](const std::string& s) { return render_labelled_tree(psi(parse_labelled_tree(s))); }},
      {"upsilon", [](const std::string& s) { return render_path(upsilon(parse_path(s))); }},
      {"merge", [](const std::string& s) { return render_labelled_tree(merge(parse_match_set(s))); }},
      {"decompose", [](const std::string& s) { return render_match_set(decompose(parse_labelled_tree(s))); }},
      {"tree-to-motzkin", [](const std::string& s) { return render_path(tree_to_motzkin(parse_tree(s))); }},
      {"motzkin-to-tree", [](const std::string& s) { return render_tree(motzkin_to_tree(parse_path(s))); }},
      {"motzkin-to-dyck", [](const std::string& s) { return render_dyck(motzkin_to_dyck(parse_path(s))); }},
      {"dyck-to-motzkin", [](const std::string& s) { return render_path(dyck_to_motzkin(parse_dyck(s))); }},
      {"attach", [](const std::string& s) { return render_tree(attach_leaves(parse_tree(s))); }},
      {"detach", [](const std::string& s) { return render_tree(detach_leaves(parse_tree(s))); }},
  };
  return m;
}

int cmd_apply(const std::string& map, const std::vector<std::string>& inputs, const std::string& format,
              std::ostream& out, std::ostream& err) {
  const Mapper& f = mappers().at(map);
  int code = kOk;
  if (format == "csv") out << "input,output\n";
  for (const auto& text : inputs) {
    std::string image;
    try {
      image = f(text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << " (input \"" << text << "\")\n";
      code = kFailure;
      continue;
    }
    if (format == "json")
      out << Json{{"input", text}, {"output", image}}.dump() << "\n";
    else if (format == "csv")
      out << text << "," << image << "\n";
    else
      out << image << "\n";
  }
  return code;
}

// ---- census / table ----

int cmd_census(const std::string& which, std::size_t n, const std::string& format, std::ostream& out) {
  if (which == "deutsch") {
    const DistributionReport r = deutsch_census(n);
    if (format == "json") {
      out << Json{{"n", r.n}, {"leaves", r.left}, {"even_level", r.right}, {"pass", r.pass}}.dump() << "\n";
    } else if (format == "csv") {
      out << "n,value,leaves,even_level\n";
      for (std::size_t k = 0; k < std::max(r.left.size(), r.right.size()); ++k)
        out << n << "," << k << "," << (k < r.left.size() ? r.left[k] : 0) << ","
            << (k < r.right.size() ? r.right[k] : 0) << "\n";
    } else {
      out << "deutsch n=" << n << " " << (r.pass ? "PASS" : "FAIL") << "\n";
    }
    return r.pass ? kOk : kFailure;
  }
  CensusReport r;
  if (which == "parity")
    r = parity_census(n);
  else if (which == "labelled")
    r = labelled_parity_census(n);
  else
    r = motzkin_census(n);
  if (format == "json")
    out << census_row_json(r).dump() << "\n";
  else if (format == "csv")
    out << census_csv_header() << "\n" << census_csv_row(r) << "\n";
  else
    out << r.kind << " n=" << r.n << " even=" << r.even << " odd=" << r.odd << " diff=" << r.signed_sum
        << " expected=" << r.expected << " " << (r.pass ? "PASS" : "FAIL") << "\n";
  return r.pass ? kOk : kFailure;
}

int cmd_sun_table(std::size_t n, const std::string& format, std::ostream& out) {
  const CensusReport r = sun_census(n);
  if (format == "json") {
    out << sun_row_json(r).dump() << "\n";
  } else if (format == "csv") {
    out << "semilength,k,count\n";
    for (std::size_t k = 0; k < r.row.size(); ++k) out << n << "," << k << "," << r.row[k] << "\n";
  } else {
    for (std::size_t k = 0; k < r.row.size(); ++k) out << "T(" << n << "," << k << ") = " << r.row[k] << "\n";
    out << "even=" << r.even << " odd=" << r.odd << " diff=" << r.signed_sum << " expected=" << r.expected << " "
        << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return r.pass ? kOk : kFailure;
}

// ---- verify ----

void print_summary(const VerifyReport& r, std::ostream& out) {
  auto line = [&](bool pass, const std::string& what) { out << (pass ? "PASS " : "FAIL ") << what << "\n"; };
  for (const auto& c : r.checks)
    line(c.pass, c.name + " n=" + std::to_string(c.n) + " checked=" + std::to_string(c.checked) +
                     (c.pass ? "" : " counterexample: " + c.counterexample));
  for (const auto& c : r.censuses)
    line(c.pass, c.kind + " n=" + std::to_string(c.n) + " diff=" + std::to_string(c.signed_sum) +
                     " expected=" + std::to_string(c.expected));
  for (const auto& d : r.distributions) line(d.pass, d.kind + " n=" + std::to_string(d.n));
  for (const auto& i : r.involutions) {
    std::string what = std::string(involution_name(i.kind)) + " n=" + std::to_string(i.n) +
                       " domain=" + std::to_string(i.domain_size) + " excluded=" + std::to_string(i.excluded);
    for (std::size_t k = 0; k < kLawCount; ++k)
      if (i.violations[k] > 0)
        what += "\n     " + std::string(law_name(static_cast<Law>(k))) + " x" + std::to_string(i.violations[k]) +
                ": " + i.counterexample[k];
    line(i.pass(), what);
  }
  out << (r.failures() == 0 ? "all checks passed" : std::to_string(r.failures()) + " checks failed") << " ("
      << r.mode << ")\n";
}

std::optional<std::size_t> env_cap() {
  const char* v = std::getenv("CATALAN_MAX_N");
  if (!v || !*v) return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoul(v));
  } catch (const std::exception&) {
    throw UsageError(std::string("CATALAN_MAX_N is not a number: ") + v);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parity-reversing involutions on plane trees and 2-Motzkin paths", "catalan"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"plain", "json", "csv"};

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "Stream every structure of a size, one encoding per line");
  enumerate->add_option("--kind", en.kind, "tree | ltree | matchset | motzkin | dyck")
      ->required()
      ->check(CLI::IsMember({"tree", "ltree", "matchset", "motzkin", "dyck"}));
  enumerate->add_option("-n", en.n, "edges (tree, ltree, matchset), length (motzkin) or semilength (dyck)")
      ->required();
  enumerate->add_option("--prefix", en.prefix, "only encodings starting with this prefix (tree, motzkin, dyck, ltree shape)");
  enumerate->add_option("--format", en.format)->check(CLI::IsMember(formats));

  std::string stats_kind = "tree", stats_format = "plain";
  std::vector<std::string> stats_inputs;
  auto* stats = app.add_subcommand("stats", "Statistics of encodings");
  stats->add_option("--kind", stats_kind, "tree | ltree | motzkin | dyck")
      ->check(CLI::IsMember({"tree", "ltree", "motzkin", "dyck"}));
  stats->add_option("--format", stats_format)->check(CLI::IsMember(formats));
  stats->add_option("encodings", stats_inputs, "encodings; read from stdin when omitted");

  std::string map_name, apply_format = "plain";
  std::vector<std::string> apply_inputs;
  auto* apply = app.add_subcommand("apply", "Apply a map to encodings");
  std::vector<std::string> map_names;
  for (const auto& [k, v] : mappers()) map_names.push_back(k);
  apply->add_option("--map", map_name)->required()->check(CLI::IsMember(map_names));
  apply->add_option("--format", apply_format)->check(CLI::IsMember(formats));
  apply->add_option("encodings", apply_inputs, "encodings; read from stdin when omitted");

  std::string which, census_format = "plain";
  std::size_t census_n = 0;
  auto* census = app.add_subcommand("census", "Exhaustive parity census");
  census->add_option("--which", which, "parity | labelled | deutsch | motzkin")
      ->required()
      ->check(CLI::IsMember({"parity", "labelled", "deutsch", "motzkin"}));
  census->add_option("-n", census_n, "edges (path length for motzkin)")->required();
  census->add_option("--format", census_format)->check(CLI::IsMember(formats));

  bool sun = false;
  std::size_t table_n = 0;
  std::string table_format = "plain";
  auto* table = app.add_subcommand("table", "udu table of Dyck paths");
  table->add_flag("--sun", sun, "T(n,k): Dyck paths of semilength n with k udu factors")->required();
  table->add_option("-n", table_n, "semilength")->required();
  table->add_option("--format", table_format)->check(CLI::IsMember(formats));

  std::string mode = "quick", verify_format = "json", mutant;
  bool serial = false, timing = false;
  auto* verify = app.add_subcommand("verify", "Run every census and involution check");
  verify->add_option("--mode", mode)->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "plain"}));
  std::vector<std::string> mutant_names;
  for (auto m : mutants::names()) mutant_names.emplace_back(m);
  verify->add_option("--mutant", mutant, "swap in a deliberately broken map")->check(CLI::IsMember(mutant_names));
  verify->add_flag("--serial", serial, "use the serial reference kernels");
  verify->add_flag("--timing", timing, "include wall times in the JSON report");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*enumerate) {
      if ((en.kind == "ltree" || en.kind == "matchset") && (en.n < 1 || en.n > limits::kLabelledEdges))
        throw std::out_of_range("-n must be in 1.." + std::to_string(limits::kLabelledEdges) + " for " + en.kind);
      if (en.kind == "matchset" && !en.prefix.empty()) throw UsageError("--prefix is not supported for matchset");
      return cmd_enumerate(en, out);
    }
    if (*stats) return cmd_stats(stats_kind, read_inputs(stats_inputs, in), stats_format, out, err);
    if (*apply) return cmd_apply(map_name, read_inputs(apply_inputs, in), apply_format, out, err);
    if (*census) return cmd_census(which, census_n, census_format, out);
    if (*table) return cmd_sun_table(table_n, table_format, out);
    if (*verify) {
      VerifyOptions o;
      o.mode = mode;
      o.cap = env_cap();
      o.execution = serial ? Execution::Serial : Execution::Parallel;
      if (!mutant.empty()) o.maps = *mutants::maps_with(mutant);
      const VerifyReport r = full_verify(o);
      if (verify_format == "json")
        out << to_json(r, timing).dump(2) << "\n";
      else
        print_summary(r, out);
      return r.failures() == 0 ? kOk : kFailure;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace catalan
