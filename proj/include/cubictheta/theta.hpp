#pragma once

#include <vector>

#include "cubictheta/series.hpp"

namespace cubictheta {

/// Characteristic [eps; eps'] of
///   theta[eps; eps'](z, tau) = sum_n exp(2 pi i ((n + eps/2)^2 tau / 2 + (n + eps/2)(z + eps'/2))).
struct ThetaChar {
  Rational eps;
  Rational eps_prime;

  bool operator==(const ThetaChar&) const = default;
  std::string to_string() const;
};

/// z = r + s tau.
struct RationalPoint {
  Rational r;
  Rational s;

  bool operator==(const RationalPoint&) const = default;
  std::string to_string() const;
};

/// j-th z-derivative of theta[ch] at z = r + s tau, as a grade-j series in q
/// known below q^order. The cyclotomic order and grid are the lcm of `ctx`
/// with whatever the phases and exponents need.
PiSeries theta_at_point(unsigned j, const ThetaChar& ch, const RationalPoint& p, const Rational& order,
                        SeriesContext ctx = {});

/// theta_at_point at z = 0.
PiSeries theta_deriv(unsigned j, const ThetaChar& ch, const Rational& order, SeriesContext ctx = {});

/// Jacobi triple product of theta[ch](0, tau).
PiSeries theta_triple_product(const ThetaChar& ch, const Rational& order, SeriesContext ctx = {});

/// Faa di Bruno: n-th derivative of log f from T_j = f^(j) / f, 1 <= n <= 5.
/// T[0] is ignored (it is 1).
template <class R>
R log_deriv_from_ratios(int n, const std::vector<R>& t);

/// Same with the denominator cleared: f^n * (log f)^(n) as a polynomial in
/// the derivatives f[0..n].
template <class R>
R log_deriv_cleared(int n, const std::vector<R>& f);

/// n-th z-log-derivative of theta[ch] at p, grade n. Throws PointIsZero when
/// the theta value vanishes below its truncation bound.
PiSeries log_deriv(int n, const ThetaChar& ch, const RationalPoint& p, const Rational& order, SeriesContext ctx = {});

// ---------------------------------------------------------------------------

namespace detail {

template <class R>
R times(long c, const R& x) {
  return R(Rational(c) * x);
}

}  // namespace detail

template <class R>
R log_deriv_from_ratios(int n, const std::vector<R>& t) {
  using detail::times;
  switch (n) {
    case 1: return t[1];
    case 2: return R(t[2] - t[1] * t[1]);
    case 3: return R(t[3] - times(3, R(t[2] * t[1])) + times(2, R(t[1] * t[1] * t[1])));
    case 4: {
      const R t11 = t[1] * t[1];
      return R(t[4] - times(4, R(t[3] * t[1])) - times(3, R(t[2] * t[2])) + times(12, R(t[2] * t11)) -
               times(6, R(t11 * t11)));
    }
    case 5: {
      const R t11 = t[1] * t[1];
      const R t111 = t11 * t[1];
      return R(t[5] - times(5, R(t[4] * t[1])) - times(10, R(t[3] * t[2])) + times(20, R(t[3] * t11)) +
               times(30, R(t[2] * t[2] * t[1])) - times(60, R(t[2] * t111)) + times(24, R(t111 * t11)));
    }
    default: throw std::out_of_range("log-derivative order must lie in 1..5");
  }
}

template <class R>
R log_deriv_cleared(int n, const std::vector<R>& f) {
  using detail::times;
  const R& f0 = f[0];
  const R& f1 = f[1];
  switch (n) {
    case 1: return f1;
    case 2: return R(f[2] * f0 - f1 * f1);
    case 3: {
      const R f00 = f0 * f0;
      return R(f[3] * f00 - times(3, R(f[2] * f1 * f0)) + times(2, R(f1 * f1 * f1)));
    }
    case 4: {
      const R f00 = f0 * f0;
      const R f11 = f1 * f1;
      return R(f[4] * f00 * f0 - times(4, R(f[3] * f1 * f00)) - times(3, R(f[2] * f[2] * f00)) +
               times(12, R(f[2] * f11 * f0)) - times(6, R(f11 * f11)));
    }
    case 5: {
      const R f00 = f0 * f0;
      const R f000 = f00 * f0;
      const R f11 = f1 * f1;
      const R f111 = f11 * f1;
      return R(f[5] * f000 * f0 - times(5, R(f[4] * f1 * f000)) - times(10, R(f[3] * f[2] * f000)) +
               times(20, R(f[3] * f11 * f00)) + times(30, R(f[2] * f[2] * f1 * f00)) -
               times(60, R(f[2] * f111 * f0)) + times(24, R(f111 * f11)));
    }
    default: throw std::out_of_range("log-derivative order must lie in 1..5");
  }
}

}  // namespace cubictheta
