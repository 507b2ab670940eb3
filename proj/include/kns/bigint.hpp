#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "kns/common.hpp"

namespace kns {

/// Exact arbitrary-precision integer.  Every counting result in this library
/// is exact; no operation ever rounds through floating point.
using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient C(n, r), exact.  Returns 0 when n < r and 1 when
/// r = 0.  Throws ParamError for negative r.
BigInt binomial(const BigInt& n, int r);

/// base^exp for exp >= 0.  Throws ParamError for negative exp.
BigInt ipow(const BigInt& base, int exp);

} // namespace kns
