#pragma once

#include <doctest.h>

#include "forestpat/error.hpp"
#include "forestpat/forest.hpp"
#include "forestpat/pattern.hpp"
#include "forestpat/permutation.hpp"

#define CHECK_ERROR_KIND(expr, k)                                   \
  do {                                                              \
    bool thrown_ = false;                                           \
    try {                                                           \
      (void)(expr);                                                 \
    } catch (const forestpat::Error& e) {                           \
      thrown_ = true;                                               \
      CHECK(e.kind() == forestpat::ErrorKind::k);                   \
    }                                                               \
    CHECK_MESSAGE(thrown_, "expected Error{" #k "}");               \
  } while (0)

namespace testing {

inline forestpat::Permutation perm(std::vector<int> w) { return forestpat::Permutation(std::move(w)); }

inline forestpat::Forest forest(int n, std::vector<int> parents) {
  return forestpat::Forest::from_parents(n, parents);
}

inline forestpat::PatternSet pats(std::string_view s) { return forestpat::parse_pattern_list(s); }

}  // namespace testing
