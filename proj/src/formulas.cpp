#include <array>
#include <mutex>

#include <boost/multiprecision/cpp_int.hpp>

#include "forestpat/error.hpp"
#include "forestpat/oracles.hpp"

namespace forestpat {

namespace {

using Rational = boost::multiprecision::cpp_rational;

BigInt require_integer(const Rational& value, Formula f, int n) {
  if (boost::multiprecision::denominator(value) != 1)
    throw Error(ErrorKind::InternalNonInteger,
                std::string(to_string(f)) + " at n=" + std::to_string(n) + " is not an integer");
  return boost::multiprecision::numerator(value);
}

BigInt uni231(int n) {
  static std::mutex mutex;
  static std::vector<BigInt> memo{1};  // F(0) = 1
  std::lock_guard lock(mutex);
  while (memo.size() <= static_cast<std::size_t>(n)) {
    const int m = static_cast<int>(memo.size());
    BigInt sum = 0;
    for (int k = 1; k <= m; ++k)
      for (int r = 1; r <= k; ++r)
        sum += binom(m - 1, k - 1) * factorial(r - 1) * memo[static_cast<std::size_t>(m - k)] *
               memo[static_cast<std::size_t>(k - r)];
    memo.push_back(sum);
  }
  return memo[static_cast<std::size_t>(n)];
}

constexpr std::array<std::pair<Formula, std::string_view>, 7> kNames{{
    {Formula::Unimodal, "unimodal"},
    {Formula::Uni123, "uni123"},
    {Formula::Uni321, "uni321"},
    {Formula::Uni132, "uni132"},
    {Formula::OneDescentPlus, "onedescent_plus"},
    {Formula::OneDescent, "onedescent"},
    {Formula::Uni231Recurrence, "uni231_recurrence"},
}};

}  // namespace

std::string_view to_string(Formula f) {
  for (const auto& [value, name] : kNames)
    if (value == f) return name;
  return "unknown";
}

std::optional<Formula> parse_formula(std::string_view name) {
  for (const auto& [value, text] : kNames)
    if (text == name) return value;
  return std::nullopt;
}

const std::vector<Formula>& all_formulas() {
  static const std::vector<Formula> all = [] {
    std::vector<Formula> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return all;
}

BigInt formula(Formula name, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "formulas are defined for n >= 1");
  BigInt sum = 0;
  switch (name) {
    case Formula::Unimodal:
      for (int k = 1; k <= n; ++k) sum += factorial(k) * stirling1(n, k);
      return sum;
    case Formula::Uni123:
      for (int k = 1; k <= n; ++k) sum += bell(k) * stirling1(n, k);
      return sum;
    case Formula::Uni321:
      for (int k = 1; k <= n; ++k) sum += factorial(k) * stirling2(n, k);
      return sum;
    case Formula::Uni132:
    case Formula::OneDescentPlus: {
      Rational s = 0;
      for (int k = 1; k <= n; ++k) s += Rational(binom(n - 1, k - 1), factorial(k));
      return require_integer(s * factorial(n), name, n);
    }
    case Formula::OneDescent: {
      Rational s = 1;
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= k && l + k <= n; ++l)
          s += Rational(binom(n - k - 1, l - 1) * binom(k, l), BigInt(1) << l);
      return require_integer(s * factorial(n), name, n);
    }
    case Formula::Uni231Recurrence:
      return uni231(n);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown formula");
}

BigInt uni231_trees(int n) {
  BigInt sum = 0;
  for (int r = 1; r <= n; ++r) sum += factorial(r - 1) * uni231(n - r);
  return sum;
}

}  // namespace forestpat
