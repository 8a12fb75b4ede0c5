#include "cubictheta/arith.hpp"

#include <algorithm>

#include "cubictheta/errors.hpp"

namespace cubictheta {

int legendre3(std::int64_t n) {
  const auto r = ((n % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw Error("divisors of a non-positive integer");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

// Positive integer value of x, or 0.
std::int64_t positive_integer(const Rational& x) {
  if (!is_integer(x) || sgn(x) <= 0) return 0;
  return to_int64(x.get_num());
}

Integer power(std::int64_t d, unsigned k) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(d), k);
  return out;
}

}  // namespace

Integer sigma(unsigned k, const Rational& x) {
  const auto n = positive_integer(x);
  Integer sum = 0;
  if (n == 0) return sum;
  for (auto d : divisors(n)) sum += power(d, k);
  return sum;
}

std::int64_t d_mod(std::int64_t j, std::int64_t k, const Rational& x) {
  if (k < 1 || j < 0 || j >= k) throw Error("d_mod needs 0 <= j < k");
  const auto n = positive_integer(x);
  if (n == 0) return 0;
  const auto ds = divisors(n);
  return std::count_if(ds.begin(), ds.end(), [&](std::int64_t d) { return d % k == j; });
}

Integer twisted_divisor_sum(unsigned k, std::int64_t n, bool twist_divisor) {
  Integer sum = 0;
  for (auto d : divisors(n)) {
    const int chi = legendre3(twist_divisor ? d : n / d);
    if (chi == 1) sum += power(d, k);
    if (chi == -1) sum -= power(d, k);
  }
  return sum;
}

}  // namespace cubictheta
