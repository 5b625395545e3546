#include "forestpat/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "forestpat/error.hpp"

namespace forestpat {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  s = trim(s);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::Parse, "expected an integer, got '" + std::string(s) + "'");
  return value;
}

// Splits on any of `seps`; empty fields are dropped.
std::vector<int> parse_ints(std::string_view s, std::string_view seps) {
  std::vector<int> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && seps.find(s[i]) == std::string_view::npos) continue;
    const auto field = trim(s.substr(start, i - start));
    if (!field.empty()) out.push_back(parse_int(field));
    start = i + 1;
  }
  return out;
}

// Contents of consecutive groups "(...)(...)" for the given brackets.
std::vector<std::string_view> groups(std::string_view s, char open, char close) {
  std::vector<std::string_view> out;
  s = trim(s);
  while (!s.empty()) {
    if (s.front() != open) throw Error(ErrorKind::Parse, std::string("expected '") + open + "' in '" + std::string(s) + "'");
    int depth = 0;
    std::size_t end = 0;
    for (; end < s.size(); ++end) {
      if (s[end] == open) ++depth;
      if (s[end] == close && --depth == 0) break;
    }
    if (end == s.size()) throw Error(ErrorKind::Parse, std::string("unbalanced '") + open + "'");
    out.push_back(s.substr(1, end - 1));
    s = trim(s.substr(end + 1));
  }
  return out;
}

std::string join(const std::vector<Label>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string braces(const std::vector<Block>& blocks) {
  std::string s;
  for (const auto& b : blocks) s += "{" + join(b, ",") + "}";
  return s;
}

std::vector<Block> parse_blocks(std::string_view text) {
  std::vector<Block> blocks;
  for (auto g : groups(text, '{', '}')) blocks.push_back(parse_ints(g, ","));
  return blocks;
}

}  // namespace

std::string to_string(const Permutation& p) { return join(p.word(), ","); }

Permutation parse_permutation(std::string_view text) { return Permutation(parse_ints(text, ", ")); }

std::string to_string(const CycleDecomposition& cd) {
  auto cycles = [&](const std::vector<int>& which) {
    std::string s;
    for (int i : which) s += "(" + join(cd.cycles()[static_cast<std::size_t>(i)], ",") + ")";
    return s;
  };
  if (!cd.is_partitioned()) {
    std::vector<int> all(cd.cycles().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return cycles(all);
  }
  std::string s;
  for (const auto& b : cd.blocks()) s += "[" + cycles(b) + "]";
  return s;
}

CycleDecomposition parse_cycles(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[') {
    std::vector<CycleDecomposition::Cycle> cycles;
    std::vector<std::vector<int>> blocks;
    for (auto block : groups(text, '[', ']')) {
      std::vector<int> members;
      for (auto c : groups(block, '(', ')')) {
        members.push_back(static_cast<int>(cycles.size()));
        cycles.push_back(parse_ints(c, ","));
      }
      blocks.push_back(std::move(members));
    }
    return CycleDecomposition::partitioned(std::move(cycles), std::move(blocks));
  }
  std::vector<CycleDecomposition::Cycle> cycles;
  for (auto c : groups(text, '(', ')')) cycles.push_back(parse_ints(c, ","));
  return CycleDecomposition::ordered(std::move(cycles));
}

std::string to_string(const SetPartition& sp) { return braces(sp.blocks()); }
std::string to_string(const OrderedSetPartition& osp) { return braces(osp.blocks()); }
std::string to_string(const ListPartition& lp) { return braces(lp.blocks()); }
std::string to_string(const Composition& c) { return join(c.parts(), ","); }

SetPartition parse_set_partition(std::string_view text) { return SetPartition(parse_blocks(text)); }
OrderedSetPartition parse_ordered_set_partition(std::string_view text) {
  return OrderedSetPartition(parse_blocks(text));
}
ListPartition parse_list_partition(std::string_view text, ListPartitionFlags flags) {
  return ListPartition(parse_blocks(text), flags);
}
Composition parse_composition(std::string_view text) { return Composition(parse_ints(text, ", ")); }

std::string to_string(const Forest& f) {
  std::string s = f.is_standard() ? std::to_string(f.size()) : "[" + join(f.ground(), ",") + "]";
  s += "|" + join(f.parents(), " ");
  if (f.is_ordered()) {
    s += "|" + join(f.ordered_children(Forest::kRoot), " ");
    for (Label v : f.ground()) s += ";" + join(f.ordered_children(v), " ");
  }
  return s;
}

Forest parse_forest(std::string_view text) {
  text = trim(text);
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw Error(ErrorKind::Parse, "forest text needs 'n|parents'");
  const auto head = trim(text.substr(0, bar));
  auto rest = text.substr(bar + 1);
  const auto bar2 = rest.find('|');
  const auto parent_text = rest.substr(0, bar2);

  std::vector<Label> ground;
  if (!head.empty() && head.front() == '[') {
    if (head.back() != ']') throw Error(ErrorKind::Parse, "unterminated ground list");
    ground = parse_ints(head.substr(1, head.size() - 2), ", ");
  } else {
    const int n = parse_int(head);
    if (n < 0) throw Error(ErrorKind::Parse, "negative vertex count");
    for (int i = 1; i <= n; ++i) ground.push_back(i);
  }
  const auto parents = parse_ints(parent_text, " ,");
  if (parents.size() != ground.size())
    throw Error(ErrorKind::Parse, "expected " + std::to_string(ground.size()) + " parents, got " +
                                      std::to_string(parents.size()));
  Forest f = Forest::from_parents(ground, parents);
  if (bar2 == std::string_view::npos) return f;

  std::vector<std::vector<Label>> orders;
  auto order_text = rest.substr(bar2 + 1);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= order_text.size(); ++i) {
    if (i < order_text.size() && order_text[i] != ';') continue;
    orders.push_back(parse_ints(order_text.substr(start, i - start), " ,"));
    start = i + 1;
  }
  // Orders are listed for vertex 0 and then by ascending label.
  return f.with_child_order(std::move(orders));
}

std::string to_string(Family family) {
  switch (family) {
    case Family::Unordered: return "unordered";
    case Family::UnorderedBinary: return "binary";
    case Family::Ordered: return "ordered";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "unordered") return Family::Unordered;
  if (name == "binary") return Family::UnorderedBinary;
  if (name == "ordered") return Family::Ordered;
  throw Error(ErrorKind::Parse, "unknown family '" + std::string(name) + "'; valid: unordered, binary, ordered");
}

Json to_json(const Forest& f) {
  Json j;
  j["n"] = f.size();
  j["parents"] = f.parents();
  if (!f.is_standard()) j["ground"] = f.ground();
  if (f.is_ordered()) {
    Json orders = Json::array();
    orders.push_back(f.ordered_children(Forest::kRoot));
    for (Label v : f.ground()) orders.push_back(f.ordered_children(v));
    j["childOrder"] = orders;
  }
  return j;
}

Forest forest_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto parents = j.at("parents").get<std::vector<Label>>();
    std::vector<Label> ground;
    if (j.contains("ground")) {
      ground = j.at("ground").get<std::vector<Label>>();
    } else {
      for (int i = 1; i <= n; ++i) ground.push_back(i);
    }
    if (static_cast<int>(ground.size()) != n) throw Error(ErrorKind::Parse, "ground size differs from n");
    Forest f = Forest::from_parents(ground, parents);
    if (j.contains("childOrder")) f = f.with_child_order(j.at("childOrder").get<std::vector<std::vector<Label>>>());
    return f;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad forest JSON: ") + e.what());
  }
}

Json to_json(const BigInt& value) {
  if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) return value.convert_to<std::uint64_t>();
  return value.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected an integer or a decimal string");
}

}  // namespace forestpat
