#pragma once

#include <cstdint>
#include <vector>

#include "cubictheta/rational.hpp"

namespace cubictheta {

/// (n/3): +1, -1 or 0 according to n mod 3.
int legendre3(std::int64_t n);

/// Positive divisors of n >= 1 in increasing order (trial division).
std::vector<std::int64_t> divisors(std::int64_t n);

/// Sum of d^k over the positive divisors d of x; 0 unless x is a positive integer.
Integer sigma(unsigned k, const Rational& x);

/// Number of positive divisors d of n with d = j mod k; 0 unless n is a positive integer.
std::int64_t d_mod(std::int64_t j, std::int64_t k, const Rational& n);

/// Sum over d | n of d^k * (d/3) when twist_divisor, else d^k * ((n/d)/3).
Integer twisted_divisor_sum(unsigned k, std::int64_t n, bool twist_divisor);

}  // namespace cubictheta
