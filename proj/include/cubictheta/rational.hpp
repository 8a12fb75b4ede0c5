#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cubictheta {

using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms (the two-argument mpq_class constructor does not reduce).
inline Rational make_rational(std::int64_t num, std::int64_t den) {
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q" (surrounding whitespace allowed).
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

std::int64_t to_int64(const Integer& z);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Integer floor_div(const Rational& r);
Integer ceil_div(const Rational& r);

/// lcm with an overflow check.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace cubictheta
