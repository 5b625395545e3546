#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "forestpat/bigint.hpp"
#include "forestpat/cycles.hpp"
#include "forestpat/forest.hpp"
#include "forestpat/partitions.hpp"
#include "forestpat/permutation.hpp"

namespace forestpat {

// Text forms. Parsers throw Error{Parse} on malformed input and let the
// constructors report semantic problems (overlaps, cycles, ...).
//
//   permutation            3,6,8,4,1,10,2,9,7,5
//   cycle decomposition    (11,4,10,7)(12)(8,3,1)(9,5,2,6)
//   partitioned cycles     [(2,1)(3)][(4)]      one [...] per block
//   set/list partition     {1,3,4,5}{2,6}
//   composition            3,3,4
//   forest                 n|p_1 p_2 ... p_n [|c_0;c_1;...;c_n]
//                          [g_1,...,g_n]|p_{g_1} ... p_{g_n} [...]  (ground != [n])

std::string to_string(const Permutation& p);
Permutation parse_permutation(std::string_view text);

std::string to_string(const CycleDecomposition& cd);
/// Accepts both the plain and the bracketed (partitioned) form.
CycleDecomposition parse_cycles(std::string_view text);

std::string to_string(const SetPartition& sp);
std::string to_string(const OrderedSetPartition& osp);
std::string to_string(const ListPartition& lp);
std::string to_string(const Composition& c);
SetPartition parse_set_partition(std::string_view text);
OrderedSetPartition parse_ordered_set_partition(std::string_view text);
ListPartition parse_list_partition(std::string_view text, ListPartitionFlags flags);
Composition parse_composition(std::string_view text);

std::string to_string(const Forest& f);
Forest parse_forest(std::string_view text);

std::string to_string(Family family);
/// unordered | binary | ordered
Family parse_family(std::string_view name);

using Json = nlohmann::json;

/// Keys: n, parents, childOrder (ordered only), ground (when not [n]).
Json to_json(const Forest& f);
Forest forest_from_json(const Json& j);

/// Counts are JSON integers when they fit in 64 bits, decimal strings otherwise.
Json to_json(const BigInt& value);
BigInt bigint_from_json(const Json& j);

}  // namespace forestpat
