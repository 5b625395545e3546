#include "forestpat/pattern.hpp"

#include <array>

#include "forestpat/error.hpp"

namespace forestpat {

namespace {

constexpr std::size_t kMaxPattern = 9;

// Classical containment: choose indices left to right, pruning as soon as a
// chosen value disagrees with the pattern's relative order.
bool match_classical(std::span<const Label> seq, std::span<const Label> pat, std::size_t depth,
                     std::size_t from, std::array<Label, kMaxPattern>& chosen) {
  if (depth == pat.size()) return true;
  const std::size_t remaining = pat.size() - depth;
  for (std::size_t i = from; i + remaining <= seq.size(); ++i) {
    const Label y = seq[i];
    bool ok = true;
    for (std::size_t s = 0; s < depth && ok; ++s)
      ok = (y < chosen[s]) == (pat[depth] < pat[s]);
    if (!ok) continue;
    chosen[depth] = y;
    if (match_classical(seq, pat, depth + 1, i + 1, chosen)) return true;
  }
  return false;
}

bool match_consecutive(std::span<const Label> seq, std::span<const Label> pat) {
  const std::size_t k = pat.size();
  for (std::size_t start = 0; start + k <= seq.size(); ++start) {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a)
      for (std::size_t b = a + 1; b < k && ok; ++b)
        ok = (seq[start + a] < seq[start + b]) == (pat[a] < pat[b]);
    if (ok) return true;
  }
  return false;
}

}  // namespace

Pattern::Pattern(Permutation perm, PatternMode mode) : perm_(std::move(perm)), mode_(mode) {
  if (perm_.empty() || !perm_.is_standard())
    throw Error(ErrorKind::InvalidArgument, "a pattern must be a permutation of [k] with k >= 1");
  if (perm_.size() > kMaxPattern)
    throw Error(ErrorKind::InvalidArgument, "patterns longer than 9 are not supported");
}

Pattern Pattern::parse(std::string_view text) {
  PatternMode mode = PatternMode::Classical;
  if (!text.empty() && text.front() == '!') {
    mode = PatternMode::Consecutive;
    text.remove_prefix(1);
  }
  if (text.empty()) throw Error(ErrorKind::Parse, "empty pattern");
  std::vector<Label> word;
  for (char c : text) {
    if (c < '1' || c > '9') throw Error(ErrorKind::Parse, "pattern must be a word of digits 1-9");
    word.push_back(c - '0');
  }
  try {
    return Pattern(Permutation(std::move(word)), mode);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, std::string("bad pattern '") + std::string(text) + "': " + e.what());
  }
}

std::string Pattern::to_string() const {
  std::string s = mode_ == PatternMode::Consecutive ? "!" : "";
  for (Label x : perm_.word()) s.push_back(static_cast<char>('0' + x));
  return s;
}

bool contains(std::span<const Label> seq, const Pattern& pattern) {
  const auto& pat = pattern.perm().word();
  if (pat.size() > seq.size()) return false;
  if (pattern.mode() == PatternMode::Consecutive) return match_consecutive(seq, pat);
  std::array<Label, kMaxPattern> chosen{};
  return match_classical(seq, pat, 0, 0, chosen);
}

bool contains(const Permutation& p, const Pattern& pattern) { return contains(p.word(), pattern); }

bool contains_any(std::span<const Label> seq, const PatternSet& patterns) {
  for (const auto& pat : patterns)
    if (contains(seq, pat)) return true;
  return false;
}

Pattern complement(const Pattern& pattern) {
  return Pattern(complement(pattern.perm()), pattern.mode());
}

PatternSet complement(const PatternSet& patterns) {
  PatternSet out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(complement(p));
  return out;
}

PatternSet parse_pattern_list(std::string_view text) {
  PatternSet out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    auto item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(Pattern::parse(item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "empty pattern list");
  return out;
}

std::string to_string(const PatternSet& patterns) {
  std::string s;
  for (const auto& p : patterns) {
    if (!s.empty()) s += ',';
    s += p.to_string();
  }
  return s;
}

}  // namespace forestpat
