#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gwcell {

using BigInt = boost::multiprecision::cpp_int;

/// C(n, k), exact. Zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace gwcell
