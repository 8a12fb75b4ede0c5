#include "cubictheta/rational.hpp"

#include <cctype>

#include "cubictheta/errors.hpp"

namespace cubictheta {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  const auto num = trim(s.substr(0, slash));
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : trim(s.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-')
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("integer does not fit 64 bits: " + z.get_str());
  return z.get_si();
}

Integer floor_div(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil_div(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("64-bit overflow in exponent arithmetic");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("64-bit overflow in exponent arithmetic");
  return out;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const auto g = std::gcd(a, b);
  return checked_mul(a / g, b < 0 ? -b : b);
}

}  // namespace cubictheta
