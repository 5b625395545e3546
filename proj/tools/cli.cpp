#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "forestpat/bijections.hpp"
#include "forestpat/error.hpp"
#include "forestpat/generators.hpp"
#include "forestpat/oracles.hpp"
#include "forestpat/text.hpp"

namespace forestpat::cli {

namespace {

enum class Format { Text, Json, Csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw UsageError("unknown format '" + s + "'; valid: text, json, csv");
}

// FOREST_PATTERNS_BUDGET is either one integer for every family or a list
// such as "unordered=9,ordered=7".
std::optional<int> env_budget(Family family) {
  const char* raw = std::getenv("FOREST_PATTERNS_BUDGET");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  const std::string text(raw);
  if (text.find('=') == std::string::npos) return std::stoi(text);
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) continue;
    if (parse_family(item.substr(0, eq)) == family) return std::stoi(item.substr(eq + 1));
  }
  return std::nullopt;
}

PatternSet apply_mode(PatternSet patterns, const std::string& mode) {
  if (mode == "mixed") return patterns;
  PatternMode forced;
  if (mode == "classical") forced = PatternMode::Classical;
  else if (mode == "consecutive") forced = PatternMode::Consecutive;
  else throw UsageError("unknown mode '" + mode + "'; valid: classical, consecutive, mixed");
  for (auto& p : patterns) p = Pattern(p.perm(), forced);
  return patterns;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// enumerate ----------------------------------------------------------------

const std::vector<std::string> kDomainFamilies{
    "permutations", "set-partitions", "ordered-set-partitions", "list-partitions",
    "ordered-list-partitions", "reversible-list-partitions", "compositions", "ordered-cycles",
    "partitioned-cycles"};

struct EnumerateArgs {
  std::string family;
  int n = 0;
  int k = 0;
  std::string avoid;
  long limit = -1;
  std::string format = "text";
};

int run_enumerate(const EnumerateArgs& a, std::ostream& out) {
  const Format format = parse_format(a.format);
  if (format == Format::Csv) throw UsageError("enumerate supports text and json output");
  long emitted = 0;
  auto room = [&] { return a.limit < 0 || emitted < a.limit; };
  auto emit_line = [&](const std::string& text, const Json& json) {
    if (!room()) return;
    out << (format == Format::Json ? json.dump() : text) << '\n';
    ++emitted;
  };

  if (a.family == "unordered" || a.family == "binary" || a.family == "ordered") {
    const PatternSet patterns = a.avoid.empty() ? PatternSet{} : parse_pattern_list(a.avoid);
    ForestStream s(a.n, parse_family(a.family));
    while (room() && s.next()) {
      if (!patterns.empty() && !avoids(s.current(), patterns)) continue;
      emit_line(to_string(s.current()), to_json(s.current()));
    }
    return 0;
  }
  if (!a.avoid.empty()) throw UsageError("--avoid applies to forest families only");
  auto as_string = [&](const auto& obj) { emit_line(to_string(obj), Json(to_string(obj))); };
  const auto& f = a.family;
  if (f == "permutations") for_each_permutation(a.n, as_string);
  else if (f == "set-partitions") for_each_set_partition(a.n, as_string);
  else if (f == "ordered-set-partitions") for_each_ordered_set_partition(a.n, as_string);
  else if (f == "list-partitions") for_each_list_partition(a.n, {}, as_string);
  else if (f == "ordered-list-partitions") for_each_list_partition(a.n, {.ordered_blocks = true}, as_string);
  else if (f == "reversible-list-partitions")
    for_each_list_partition(a.n, {.ordered_blocks = true, .up_to_reverse = true}, as_string);
  else if (f == "compositions") {
    if (a.k > 0) for_each_composition(a.n, a.k, as_string);
    else for_each_composition(a.n, as_string);
  } else if (f == "ordered-cycles") for_each_ordered_cycle_decomp(a.n, as_string);
  else if (f == "partitioned-cycles") for_each_partitioned_cycle_decomp(a.n, as_string);
  else {
    std::string valid = "unordered, binary, ordered";
    for (const auto& d : kDomainFamilies) valid += ", " + d;
    throw UsageError("unknown family '" + f + "'; valid: " + valid);
  }
  return 0;
}

// count --------------------------------------------------------------------

struct CountArgs {
  std::string family;
  int n = 0;
  std::string avoid;
  std::string mode = "mixed";
  std::string by;
  std::string check = "leaves";
  unsigned jobs = 0;
  bool no_budget = false;
  std::string format = "text";
};

CountOptions count_options(Family family, unsigned jobs, bool no_budget) {
  CountOptions o;
  o.jobs = jobs;
  o.ignore_budget = no_budget;
  o.budget = env_budget(family);
  return o;
}

int run_count(const CountArgs& a, std::ostream& out) {
  const Format format = parse_format(a.format);
  const Family family = parse_family(a.family);
  const PatternSet patterns = apply_mode(parse_pattern_list(a.avoid), a.mode);
  CountOptions options = count_options(family, a.jobs, a.no_budget);
  if (a.check == "vertices") options.check = PathCheck::AllVertices;
  else if (a.check != "leaves") throw UsageError("unknown --check '" + a.check + "'; valid: leaves, vertices");

  if (a.by.empty()) {
    const BigInt count = brute_count(a.n, family, patterns, options);
    switch (format) {
      case Format::Text: out << count << '\n'; break;
      case Format::Json:
        out << Json{{"family", to_string(family)}, {"n", a.n}, {"patterns", to_string(patterns)}, {"count", to_json(count)}}.dump()
            << '\n';
        break;
      case Format::Csv:
        out << "family,n,patterns,count\n"
            << to_string(family) << ',' << a.n << ',' << csv_quote(to_string(patterns)) << ',' << count << '\n';
        break;
    }
    return 0;
  }

  Statistic stat;
  if (a.by == "tdm") stat = Statistic::TopDownMaxima;
  else if (a.by == "trees") stat = Statistic::TreeCount;
  else throw UsageError("unknown --by '" + a.by + "'; valid: tdm, trees");
  const auto dist = refined_distribution(a.n, family, patterns, stat, options);
  BigInt total = 0;
  for (const auto& [value, count] : dist) total += count;
  switch (format) {
    case Format::Text:
      for (const auto& [value, count] : dist) out << a.by << '=' << value << '\t' << count << '\n';
      out << "total\t" << total << '\n';
      break;
    case Format::Json: {
      Json by = Json::object();
      for (const auto& [value, count] : dist) by[std::to_string(value)] = to_json(count);
      out << Json{{"family", to_string(family)}, {"n", a.n}, {"patterns", to_string(patterns)},
                  {"by", a.by}, {"distribution", by}, {"count", to_json(total)}}.dump()
          << '\n';
      break;
    }
    case Format::Csv:
      out << "statistic,value,count\n";
      for (const auto& [value, count] : dist) out << a.by << ',' << value << ',' << count << '\n';
      break;
  }
  return 0;
}

// map ----------------------------------------------------------------------

struct Bijection {
  std::string name;
  std::function<Forest(const std::string&)> forward;
  std::function<std::string(const Forest&)> inverse;
};

const std::vector<Bijection>& bijections() {
  static const std::vector<Bijection> all{
      {"phi", [](const std::string& s) { return phi(parse_permutation(s)); },
       [](const Forest& f) { return to_string(phi_inv(f)); }},
      {"phi_d", [](const std::string& s) { return phi_d(parse_permutation(s)); },
       [](const Forest& f) { return to_string(phi_d_inv(f)); }},
      {"theta", [](const std::string& s) { return theta(parse_cycles(s)); },
       [](const Forest& f) { return to_string(theta_inv(f)); }},
      {"shallow", [](const std::string& s) { return shallow(parse_set_partition(s)); },
       [](const Forest& f) { return to_string(shallow_inv(f)); }},
      {"xi", [](const std::string& s) { return xi(parse_cycles(s)); },
       [](const Forest& f) { return to_string(xi_inv(f)); }},
      {"gamma", [](const std::string& s) { return gamma(parse_ordered_set_partition(s)); },
       [](const Forest& f) { return to_string(gamma_inv(f)); }},
      {"tau", [](const std::string& s) { return tau(parse_list_partition(s, {}), TauVariant::Unimodal132); },
       [](const Forest& f) { return to_string(tau_inv(f, TauVariant::Unimodal132)); }},
      {"tau_onedescent",
       [](const std::string& s) { return tau(parse_list_partition(s, {}), TauVariant::OneDescent); },
       [](const Forest& f) { return to_string(tau_inv(f, TauVariant::OneDescent)); }},
      {"rho", [](const std::string& s) { return rho(parse_permutation(s)); },
       [](const Forest& f) { return to_string(rho_inv(f)); }},
      {"psi",
       [](const std::string& s) {
         return psi(parse_list_partition(s, {.ordered_blocks = true, .up_to_reverse = true}));
       },
       [](const Forest& f) { return to_string(psi_inv(f)); }},
      {"alpha", [](const std::string& s) { return alpha(parse_forest(s)); },
       [](const Forest& f) { return to_string(beta_wilf(f)); }},
      {"beta", [](const std::string& s) { return beta_wilf(parse_forest(s)); },
       [](const Forest& f) { return to_string(alpha(f)); }},
  };
  return all;
}

struct MapArgs {
  std::string bijection;
  bool inverse = false;
  std::string input;
  std::string format = "text";
};

int run_map(const MapArgs& a, std::ostream& out) {
  const Format format = parse_format(a.format);
  const auto& all = bijections();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Bijection& b) { return b.name == a.bijection; });
  if (it == all.end()) {
    std::string valid;
    for (const auto& b : all) valid += (valid.empty() ? "" : ", ") + b.name;
    throw UsageError("unknown bijection '" + a.bijection + "'; valid: " + valid);
  }
  if (!a.inverse) {
    const Forest f = it->forward(a.input);
    out << (format == Format::Json ? to_json(f).dump() : to_string(f)) << '\n';
    return 0;
  }
  const std::string_view in = a.input;
  const Forest f = !in.empty() && in.front() == '{' ? forest_from_json(Json::parse(a.input)) : parse_forest(a.input);
  const std::string object = it->inverse(f);
  out << (format == Format::Json ? Json{{"bijection", a.bijection}, {"inverse", object}}.dump() : object) << '\n';
  return 0;
}

// verify -------------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  int max_n = 0;
  unsigned jobs = 0;
  bool no_budget = false;
  std::string format = "text";
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const Format format = parse_format(a.format);
  CountOptions options;
  options.jobs = a.jobs;
  options.ignore_budget = a.no_budget;
  options.budget = env_budget(Family::Unordered);
  VerifyReport report;
  try {
    report = verify_theorem(a.theorem, a.max_n, options);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) throw UsageError(e.what());
    throw;
  }
  switch (format) {
    case Format::Text:
      for (const auto& r : report.rows)
        out << "n=" << r.n << '\t' << r.label << "\texpected=" << r.expected << "\tcomputed=" << r.computed << '\t'
            << (r.pass() ? "PASS" : "FAIL") << '\n';
      out << report.theorem << ": " << (report.pass() ? "PASS" : "FAIL") << '\n';
      break;
    case Format::Json: {
      Json rows = Json::array();
      for (const auto& r : report.rows)
        rows.push_back({{"n", r.n}, {"label", r.label}, {"expected", to_json(r.expected)},
                        {"computed", to_json(r.computed)}, {"pass", r.pass()}});
      out << Json{{"theorem", report.theorem}, {"pass", report.pass()}, {"rows", rows}}.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "theorem,n,label,expected,computed,status\n";
      for (const auto& r : report.rows)
        out << report.theorem << ',' << r.n << ',' << csv_quote(r.label) << ',' << r.expected << ',' << r.computed
            << ',' << (r.pass() ? "PASS" : "FAIL") << '\n';
      break;
  }
  return report.pass() ? 0 : 1;
}

// table --------------------------------------------------------------------

struct TableArgs {
  int figure = 0;
  int max_n = 5;
  unsigned jobs = 0;
  bool no_budget = false;
  std::string format = "csv";
};

std::string status_of(const TableCell& c) {
  if (!c.expected) return "unpublished";
  return *c.expected == c.computed ? "match" : "mismatch";
}

int run_table(const TableArgs& a, std::ostream& out) {
  const Format format = parse_format(a.format);
  const auto figures = known_figures();
  if (std::find(figures.begin(), figures.end(), a.figure) == figures.end())
    throw UsageError("unknown figure " + std::to_string(a.figure) + "; valid: 7, 12, 13");
  Family family = a.figure == 7 ? Family::Unordered : a.figure == 12 ? Family::UnorderedBinary : Family::Ordered;
  const FigureTable table = compute_figure(a.figure, a.max_n, count_options(family, a.jobs, a.no_budget));
  auto mode = [](const Pattern& p) { return p.mode() == PatternMode::Classical ? "classical" : "consecutive"; };
  auto word = [](const Pattern& p) { return Pattern(p.perm()).to_string(); };

  switch (format) {
    case Format::Csv:
      out << "figure,family,n,mode,pattern,count,expected,source,status\n";
      for (const auto& c : table.cells)
        out << table.figure << ',' << to_string(table.family) << ',' << c.n << ',' << mode(c.pattern) << ','
            << word(c.pattern) << ',' << c.computed << ',' << (c.expected ? c.expected->str() : "") << ",computed,"
            << status_of(c) << '\n';
      break;
    case Format::Json: {
      Json rows = Json::array();
      for (const auto& c : table.cells)
        rows.push_back({{"n", c.n}, {"mode", mode(c.pattern)}, {"pattern", word(c.pattern)},
                        {"count", to_json(c.computed)}, {"expected", c.expected ? to_json(*c.expected) : Json()},
                        {"source", "computed"}, {"status", status_of(c)}});
      out << Json{{"figure", table.figure}, {"family", to_string(table.family)}, {"rows", rows}}.dump() << '\n';
      break;
    }
    case Format::Text: {
      out << "figure " << table.figure << " (" << to_string(table.family) << ")\n";
      out << std::setw(3) << "n";
      for (const char* h : {"321", "231", "132", "!321", "!231", "!132"}) out << std::setw(8) << h;
      out << '\n';
      for (std::size_t i = 0; i < table.cells.size(); ++i) {
        const auto& c = table.cells[i];
        if (i % 6 == 0) out << std::setw(3) << c.n;
        out << std::setw(8) << (c.computed.str() + (status_of(c) == "mismatch" ? "*" : ""));
        if (i % 6 == 5) out << '\n';
      }
      break;
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern avoidance in rooted labeled forests", "forestpat"};
  app.require_subcommand(1);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "List every object of a family, one per line");
  enumerate->add_option("--family", en.family, "unordered | binary | ordered | permutations | set-partitions | ...")->required();
  enumerate->add_option("--n", en.n, "Size")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--k", en.k, "Number of parts (compositions)");
  enumerate->add_option("--avoid", en.avoid, "Keep only forests avoiding these patterns, e.g. 321,!231");
  enumerate->add_option("--limit", en.limit, "Stop after this many objects");
  enumerate->add_option("--format", en.format, "text | json");

  CountArgs co;
  auto* count = app.add_subcommand("count", "Count the forests of a family avoiding a pattern set");
  count->add_option("--family", co.family, "unordered | binary | ordered")->required();
  count->add_option("--n", co.n, "Number of vertices")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--avoid", co.avoid, "Comma-separated patterns; '!' marks consecutive")->required();
  count->add_option("--mode", co.mode, "classical | consecutive | mixed");
  count->add_option("--by", co.by, "Refine by tdm (top-down maxima) or trees");
  count->add_option("--check", co.check, "leaves | vertices");
  count->add_option("--jobs", co.jobs, "Worker threads (0 = all cores)");
  count->add_flag("--no-budget", co.no_budget, "Lift the per-family size limit");
  count->add_option("--format", co.format, "text | json | csv");

  MapArgs ma;
  auto* map = app.add_subcommand("map", "Apply a bijection to one object");
  map->add_option("--bijection", ma.bijection, "phi, phi_d, theta, shallow, xi, gamma, tau, tau_onedescent, rho, psi, alpha, beta")
      ->required();
  map->add_flag("--inverse", ma.inverse, "Read a forest and apply the inverse map");
  map->add_option("--input", ma.input, "Object in its text form")->required();
  map->add_option("--format", ma.format, "text | json");

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Check a counting result against brute force");
  verify->add_option("--theorem", ve.theorem, "unimodal, uni123, uni321, uni132, onedescent_plus, onedescent, uni231_recurrence, ...")->required();
  verify->add_option("--max-n", ve.max_n, "Largest n to check")->required()->check(CLI::PositiveNumber);
  verify->add_option("--jobs", ve.jobs, "Worker threads (0 = all cores)");
  verify->add_flag("--no-budget", ve.no_budget, "Lift the per-family size limit");
  verify->add_option("--format", ve.format, "text | json | csv");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Recompute a published avoidance table");
  table->add_option("--figure", ta.figure, "7 (unordered), 12 (binary) or 13 (ordered)")->required();
  table->add_option("--max-n", ta.max_n, "Largest n")->check(CLI::PositiveNumber);
  table->add_option("--jobs", ta.jobs, "Worker threads (0 = all cores)");
  table->add_flag("--no-budget", ta.no_budget, "Lift the per-family size limit");
  table->add_option("--format", ta.format, "csv | json | text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*enumerate) return run_enumerate(en, out);
    if (*count) return run_count(co, out);
    if (*map) return run_map(ma, out);
    if (*verify) return run_verify(ve, out);
    if (*table) return run_table(ta, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace forestpat::cli
