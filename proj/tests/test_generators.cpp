#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracle.hpp"

#include "forestpat/generators.hpp"
#include "forestpat/oracles.hpp"
#include "forestpat/text.hpp"

using namespace forestpat;

namespace {

std::vector<Forest> drain(int n, Family family, std::span<const Label> prefix = {}) {
  std::vector<Forest> out;
  ForestStream s(n, family, prefix);
  while (s.next()) out.push_back(s.current());
  return out;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("small family sizes") {
  CHECK(count_forests(2, Family::Unordered) == 3);
  CHECK(count_forests(2, Family::Ordered) == 4);
  CHECK(count_forests(3, Family::UnorderedBinary) == 15);
  CHECK(count_forests(0, Family::Unordered) == 1);
  CHECK(drain(0, Family::Ordered).size() == 1);
}

TEST_CASE("unordered and binary streams match naive parent vectors") {
  for (int n = 1; n <= 6; ++n) {
    const auto naive = oracle::all_forests(n);
    std::vector<std::vector<Label>> got;
    for (const auto& f : drain(n, Family::Unordered)) got.push_back(f.parents());
    CHECK(got == naive);  // same set, same lexicographic order

    std::vector<std::vector<Label>> bin, naive_bin;
    for (const auto& f : drain(n, Family::UnorderedBinary)) bin.push_back(f.parents());
    for (const auto& p : naive)
      if (oracle::binary(p)) naive_bin.push_back(p);
    CHECK(bin == naive_bin);
  }
}

TEST_CASE("stream cardinalities") {
  for (int n = 1; n <= 8; ++n) CHECK(count_forests(n, Family::Unordered) == ipow(std::uint64_t(n) + 1, n - 1));
  for (int n = 1; n <= 6; ++n) CHECK(BigInt(count_forests(n, Family::Ordered)) == factorial(n) * catalan(n));
}

TEST_CASE("ordered stream: no duplicates, complete orderings") {
  for (int n = 1; n <= 5; ++n) {
    const auto all = drain(n, Family::Ordered);
    std::set<Forest> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    std::uint64_t expected = 0;
    for (const auto& p : oracle::all_forests(n)) expected += oracle::orderings(p);
    CHECK(all.size() == expected);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all == drain(n, Family::Ordered));
  }
}

TEST_CASE("partition prefixes split the stream exactly") {
  for (Family fam : {Family::Unordered, Family::UnorderedBinary, Family::Ordered}) {
    const int n = fam == Family::Ordered ? 4 : 5;
    std::vector<Forest> joined;
    for (const auto& prefix : stream_partitions(n, fam)) {
      auto part = drain(n, fam, prefix);
      joined.insert(joined.end(), part.begin(), part.end());
    }
    CHECK(joined == drain(n, fam));
  }
}

TEST_CASE("domain generators") {
  CHECK(all_set_partitions(3).size() == 5);
  for (int n = 0; n <= 7; ++n) {
    CHECK(BigInt(all_set_partitions(n).size()) == bell(n));
    BigInt osp = 0;
    for (int k = 0; k <= n; ++k) osp += factorial(k) * stirling2(n, k);
    CHECK(BigInt(all_ordered_set_partitions(n).size()) == osp);
    BigInt ocd = 0;
    for (int k = 0; k <= n; ++k) ocd += factorial(k) * stirling1(n, k);
    CHECK(BigInt(all_ordered_cycle_decomps(n).size()) == ocd);
  }
}

TEST_CASE("compositions of 10") {
  const auto all = all_compositions(10, 3);
  CHECK(all.size() == 36);
  CHECK(std::count(all.begin(), all.end(), Composition({3, 3, 4})) == 1);
  CHECK(std::count(all.begin(), all.end(), Composition({3, 4, 3})) == 1);
  std::vector<Composition> any;
  for_each_composition(10, [&](const Composition& c) { any.push_back(c); });
  CHECK(any.size() == 512);
  CHECK(std::count(any.begin(), any.end(), Composition({2, 2, 1, 4, 1})) == 1);
  CHECK_ERROR_KIND(Composition({2, 0}), InvalidArgument);
}

TEST_CASE("list partitions") {
  const auto lists = all_list_partitions(6, {});
  const auto a = ListPartition({{1, 6}, {2}, {3, 4, 5}}, {});
  const auto b = ListPartition({{6, 1}, {2}, {3, 5, 4}}, {});
  CHECK(a != b);
  CHECK(std::count(lists.begin(), lists.end(), a) == 1);
  CHECK(std::count(lists.begin(), lists.end(), b) == 1);
  // Lah numbers summed: 1, 1, 3, 13, 73, 501, 4051
  CHECK(lists.size() == 4051);

  const ListPartitionFlags rev{.ordered_blocks = true, .up_to_reverse = true};
  CHECK(all_list_partitions(3, rev).size() == 15);
  CHECK(ListPartition({{1, 2}}, rev) == ListPartition({{2, 1}}, rev));
  CHECK(normalize_up_to_reverse({1, 3, 2}) == Block{2, 3, 1});
  for (int n = 1; n <= 6; ++n) CHECK(BigInt(all_list_partitions(n, rev).size()) == formula(Formula::OneDescent, n));
}

TEST_CASE("generators are duplicate free and deterministic") {
  for (int n = 1; n <= 6; ++n) {
    auto sp = all_set_partitions(n);
    CHECK(std::set(sp.begin(), sp.end()).size() == sp.size());
    auto osp = all_ordered_set_partitions(n);
    CHECK(std::set(osp.begin(), osp.end()).size() == osp.size());
    auto lp = all_list_partitions(n, {.ordered_blocks = true});
    CHECK(std::set(lp.begin(), lp.end()).size() == lp.size());
    CHECK(lp == all_list_partitions(n, {.ordered_blocks = true}));
    std::set<std::string> cds;
    for (const auto& cd : all_partitioned_cycle_decomps(n)) cds.insert(to_string(cd));
    BigInt expected = 0;
    for (int k = 0; k <= n; ++k) expected += bell(k) * stirling1(n, k);
    CHECK(BigInt(cds.size()) == expected);
  }
}
