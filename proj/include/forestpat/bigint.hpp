#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace forestpat {

/// Exact counts. Nothing in the counting code path uses floating point.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace forestpat
