#include <array>
#include <algorithm>
#include <functional>

#include "forestpat/error.hpp"
#include "forestpat/generators.hpp"
#include "forestpat/oracles.hpp"
#include "forestpat/text.hpp"

namespace forestpat {

namespace {

PatternSet patterns(std::initializer_list<const char*> words) {
  PatternSet ps;
  for (const char* w : words) ps.push_back(Pattern::parse(w));
  return ps;
}

std::string set_label(const PatternSet& ps) { return "f_n(" + to_string(ps) + ")"; }

struct FormulaTheorem {
  Formula formula;
  std::vector<PatternSet> sets;
};

// Every enumeration result paired with the pattern sets it counts, the
// complementary set included.
const std::vector<FormulaTheorem>& formula_theorems() {
  static const std::vector<FormulaTheorem> all{
      {Formula::Unimodal, {patterns({"213", "312"}), patterns({"231", "132"})}},
      {Formula::Uni123, {patterns({"213", "312", "123"}), patterns({"231", "132", "321"})}},
      {Formula::Uni321, {patterns({"213", "312", "321"}), patterns({"231", "132", "123"})}},
      {Formula::Uni132, {patterns({"312", "213", "132"}), patterns({"132", "231", "312"})}},
      {Formula::OneDescentPlus, {patterns({"321", "132", "213"}), patterns({"123", "312", "231"})}},
      {Formula::Uni231Recurrence, {patterns({"213", "312", "231"}), patterns({"231", "132", "213"})}},
      {Formula::OneDescent, {patterns({"321", "2143", "3142"}), patterns({"123", "3412", "2413"})}},
  };
  return all;
}

using Check = std::function<void(int n, const CountOptions&, std::vector<VerifyRow>&)>;

struct Registered {
  TheoremInfo info;
  Check check;
};

void add_distribution_rows(int n, const std::map<int, BigInt>& computed,
                           const std::function<BigInt(int)>& expected, const std::string& stat,
                           std::vector<VerifyRow>& rows) {
  for (int k = 1; k <= n; ++k) {
    auto it = computed.find(k);
    rows.push_back({n, stat + "=" + std::to_string(k), expected(k), it == computed.end() ? BigInt(0) : it->second});
  }
}

const std::vector<Registered>& registry() {
  static const std::vector<Registered> all = [] {
    std::vector<Registered> r;
    for (const auto& t : formula_theorems()) {
      std::string desc;
      for (const auto& s : t.sets) desc += (desc.empty() ? "" : " and ") + set_label(s);
      r.push_back({{std::string(to_string(t.formula)), desc + " against the closed form"},
                   [t](int n, const CountOptions& o, std::vector<VerifyRow>& rows) {
                     const BigInt expected = formula(t.formula, n);
                     for (const auto& s : t.sets)
                       rows.push_back({n, set_label(s), expected, brute_count(n, Family::Unordered, s, o)});
                   }});
    }
    r.push_back({{"unimodal_tdm", "unimodal forests with k top-down maxima = k! c(n,k)"},
                 [](int n, const CountOptions& o, std::vector<VerifyRow>& rows) {
                   add_distribution_rows(
                       n, refined_distribution(n, Family::Unordered, patterns({"213", "312"}), Statistic::TopDownMaxima, o),
                       [n](int k) { return factorial(k) * stirling1(n, k); }, "tdm", rows);
                 }});
    r.push_back({{"unimodal_trees", "unimodal forests with m trees = sum_k c(k,m) c(n,k)"},
                 [](int n, const CountOptions& o, std::vector<VerifyRow>& rows) {
                   add_distribution_rows(
                       n, refined_distribution(n, Family::Unordered, patterns({"213", "312"}), Statistic::TreeCount, o),
                       [n](int m) {
                         BigInt s = 0;
                         for (int k = m; k <= n; ++k) s += stirling1(k, m) * stirling1(n, k);
                         return s;
                       },
                       "trees", rows);
                 }});
    r.push_back({{"uni132_trees", "forests avoiding {312,213,132} with k trees = (n!/k!) C(n-1,k-1)"},
                 [](int n, const CountOptions& o, std::vector<VerifyRow>& rows) {
                   add_distribution_rows(
                       n, refined_distribution(n, Family::Unordered, patterns({"312", "213", "132"}), Statistic::TreeCount, o),
                       [n](int k) { return factorial(n) / factorial(k) * binom(n - 1, k - 1); }, "trees", rows);
                 }});
    r.push_back({{"increasing", "f_n(21) = f_n(12) = n!"},
                 [](int n, const CountOptions& o, std::vector<VerifyRow>& rows) {
                   for (const char* w : {"21", "12"}) {
                     const auto ps = patterns({w});
                     rows.push_back({n, set_label(ps), factorial(n), brute_count(n, Family::Unordered, ps, o)});
                   }
                 }});
    r.push_back({{"wilf_321_312", "f_n(321) = f_n(312)"},
                 [](int n, const CountOptions& o, std::vector<VerifyRow>& rows) {
                   rows.push_back({n, "f_n(321) vs f_n(312)", brute_count(n, Family::Unordered, patterns({"312"}), o),
                                   brute_count(n, Family::Unordered, patterns({"321"}), o)});
                 }});
    r.push_back({{"complement", "f_n(S) = f_n(S^c) for every length-3 pattern, both modes, all families"},
                 [](int n, const CountOptions& o, std::vector<VerifyRow>& rows) {
                   for (Family fam : {Family::Unordered, Family::UnorderedBinary, Family::Ordered}) {
                     if (!o.ignore_budget && n > o.budget.value_or(default_budget(fam))) continue;
                     for (const char* w : {"123", "132", "213", "231", "312", "321", "!123", "!132", "!213", "!231", "!312", "!321"}) {
                       const auto ps = patterns({w});
                       rows.push_back({n, to_string(fam) + " " + set_label(ps) + " vs complement",
                                       brute_count(n, fam, complement(ps), o), brute_count(n, fam, ps, o)});
                     }
                   }
                 }});
    r.push_back({{"totals", "family totals: (n+1)^(n-1) unordered, n! Catalan(n) ordered"},
                 [](int n, const CountOptions& o, std::vector<VerifyRow>& rows) {
                   if (o.ignore_budget || n <= o.budget.value_or(default_budget(Family::Unordered)))
                     rows.push_back({n, "unordered", boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(n - 1)),
                                     count_forests(n, Family::Unordered)});
                   if (o.ignore_budget || n <= o.budget.value_or(default_budget(Family::Ordered)))
                     rows.push_back({n, "ordered", factorial(n) * catalan(n), count_forests(n, Family::Ordered)});
                 }});
    return r;
  }();
  return all;
}

}  // namespace

bool VerifyReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass(); });
}

const std::vector<TheoremInfo>& theorems() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> v;
    for (const auto& r : registry()) v.push_back(r.info);
    return v;
  }();
  return infos;
}

VerifyReport verify_theorem(std::string_view name, int max_n, const CountOptions& options) {
  for (const auto& r : registry()) {
    if (r.info.name != name) continue;
    VerifyReport report{r.info.name, {}};
    for (int n = 1; n <= max_n; ++n) r.check(n, options, report.rows);
    return report;
  }
  std::string valid;
  for (const auto& r : registry()) valid += (valid.empty() ? "" : ", ") + r.info.name;
  throw Error(ErrorKind::InvalidArgument, "unknown theorem '" + std::string(name) + "'; valid names: " + valid);
}

// Figure tables ------------------------------------------------------------

namespace {

struct Published {
  int figure;
  Family family;
  // [pattern column][n-1]; -1 marks a value the source leaves open.
  std::array<std::array<long, 5>, 6> values;
};

const std::array<const char*, 6> kColumns{"321", "231", "132", "!321", "!231", "!132"};

const std::vector<Published>& published() {
  static const std::vector<Published> all{
      {7, Family::Unordered,
       {{{1, 3, 15, 104, 918}, {1, 3, 15, 104, 917}, {1, 3, 15, 104, 918},
         {1, 3, 15, 107, 997}, {1, 3, 15, 106, 973}, {1, 3, 15, 106, 972}}}},
      {12, Family::UnorderedBinary,
       {{{1, 3, 14, 87, 668}, {1, 3, 14, 87, 667}, {1, 3, 14, 87, 668},
         {1, 3, 14, 90, 747}, {1, 3, 14, 89, 723}, {1, 3, 14, 89, 722}}}},
      {13, Family::Ordered,
       {{{1, 4, 29, 304, 4158}, {1, 4, 29, 304, 4156}, {1, 4, 29, 304, 4158},
         {1, 4, 29, 307, -1}, {1, 4, 29, 306, -1}, {1, 4, 29, 306, -1}}}},
  };
  return all;
}

const Published& figure_data(int figure) {
  for (const auto& p : published())
    if (p.figure == figure) return p;
  throw Error(ErrorKind::InvalidArgument, "unknown figure " + std::to_string(figure) + "; valid: 7, 12, 13");
}

}  // namespace

std::vector<int> known_figures() { return {7, 12, 13}; }

std::optional<BigInt> published_value(int figure, int n, const Pattern& pattern) {
  const auto& data = figure_data(figure);
  if (n < 1 || n > 5) return std::nullopt;
  for (std::size_t c = 0; c < kColumns.size(); ++c) {
    if (Pattern::parse(kColumns[c]) != pattern) continue;
    const long v = data.values[c][static_cast<std::size_t>(n - 1)];
    if (v < 0) return std::nullopt;
    return BigInt(v);
  }
  return std::nullopt;
}

FigureTable compute_figure(int figure, int max_n, const CountOptions& options) {
  const auto& data = figure_data(figure);
  FigureTable table{figure, data.family, {}};
  for (int n = 1; n <= max_n; ++n) {
    for (const char* col : kColumns) {
      const Pattern p = Pattern::parse(col);
      table.cells.push_back({n, p, brute_count(n, data.family, {p}, options), published_value(figure, n, p)});
    }
  }
  return table;
}

}  // namespace forestpat
