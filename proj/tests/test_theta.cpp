#include <random>

#include "cubictheta/errors.hpp"
#include "cubictheta/generators.hpp"
#include "cubictheta/theta.hpp"
#include "doctest.h"

using namespace cubictheta;

namespace {

const SeriesContext k1{1, 1};

Rational Q(long p, long q = 1) { return make_rational(p, q); }

CycloNumber zeta(std::int64_t k, std::int64_t n) { return CycloNumber::root_of_unity(k, CycloContext::get(n)); }

Rational rc(const PiSeries& f, const Rational& e) {
  const auto x = f.coefficient(e);
  REQUIRE(x.is_rational());
  return x.rational_part();
}

bool same(const PiSeries& f, const PiSeries& g) { return equal_to_order(f, g).equal; }

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Rational random_rational(std::mt19937_64& rng, int span = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-span, span), den(1, max_den);
  return make_rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("theta constants: leading coefficients") {
  const Rational o(5);
  const auto t00 = theta_deriv(0, {Q(0), Q(0)}, o, k1);
  CHECK(rc(t00, 0) == 1);
  CHECK(rc(t00, Q(1, 2)) == 2);
  CHECK(rc(t00, 2) == 2);
  CHECK(rc(t00, 1) == 0);
  const auto t01 = theta_deriv(0, {Q(0), Q(1)}, o, k1);
  CHECK(rc(t01, Q(1, 2)) == -2);
  const auto t10 = theta_deriv(0, {Q(1), Q(0)}, o, k1);
  CHECK(rc(t10, Q(1, 8)) == 2);
  CHECK(rc(t10, Q(9, 8)) == 2);
  CHECK(theta_deriv(0, {Q(1), Q(1)}, o, k1).is_zero());
  const auto tp = theta_deriv(1, {Q(1), Q(1)}, o, k1);
  CHECK(tp.pi_grade() == 1);
  CHECK(rc(tp, Q(1, 8)) == -2);
  CHECK(rc(tp, Q(9, 8)) == 6);
}

TEST_CASE("theta at a point: grids and phases") {
  const auto f = theta_at_point(0, {Q(0), Q(0)}, {Q(1, 4), Q(0)}, Rational(3), k1);
  // 1 + 2 cos(pi n / 2) q^(n^2/2): the n = 1 terms cancel, n = 2 gives -2.
  CHECK(f.coefficient(Q(1, 2)).is_zero());
  CHECK(rc(f, 2) == -2);
  const auto g = theta_at_point(0, {Q(0), Q(0)}, {Q(0), Q(1, 2)}, Rational(2), k1);
  // q^(n^2/2 + n/2): n = 0, -1 give 1 each at q^0.
  CHECK(rc(g, 0) == 2);
  CHECK(rc(g, 1) == 2);
}

TEST_CASE("characteristic shifts") {
  std::mt19937_64 rng(7);
  const Rational o(6);
  for (int trial = 0; trial < 40; ++trial) {
    const ThetaChar ch{random_rational(rng, 3, 3), random_rational(rng, 3, 3)};
    const RationalPoint p{random_rational(rng, 2, 4), random_rational(rng, 1, 3)};
    const auto f = theta_at_point(0, ch, p, o, k1);
    // theta[eps + 2, eps'] = theta[eps, eps'].
    CHECK(same(f, theta_at_point(0, {ch.eps + 2, ch.eps_prime}, p, o, k1)));
    // theta[eps, eps' + 2] = e^(pi i eps) theta[eps, eps'].
    const auto e_pi_i_eps = [&] {
      const auto den = to_int64(ch.eps.get_den());
      return CycloNumber::root_of_unity(to_int64(ch.eps.get_num()), CycloContext::get(2 * den));
    }();
    CHECK(same(theta_at_point(0, {ch.eps, ch.eps_prime + 2}, p, o, k1), scale(f, e_pi_i_eps)));
    // z -> z + 1 multiplies by e^(pi i eps).
    CHECK(same(theta_at_point(0, ch, {p.r + 1, p.s}, o, k1), scale(f, e_pi_i_eps)));
    // z -> -z with the characteristic negated.
    CHECK(same(theta_at_point(0, {-ch.eps, -ch.eps_prime}, {-p.r, -p.s}, o, k1), f));
  }
}

TEST_CASE("quasi-periodicity in tau") {
  // theta(z + tau) = e^(-pi i eps') e^(-2 pi i r) q^(-1/2 - s) theta(z) for z = r + s tau.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const ThetaChar ch{random_rational(rng, 2, 3), random_rational(rng, 2, 3)};
    const RationalPoint p{random_rational(rng, 2, 5), random_rational(rng, 1, 2)};
    const Rational o(8);
    const auto lhs = theta_at_point(0, ch, {p.r, p.s + 1}, o, k1);
    const Rational angle = -ch.eps_prime / 2 - p.r;  // in units of 2 pi
    const auto den = to_int64(angle.get_den());
    const auto ph = CycloNumber::root_of_unity(to_int64(angle.get_num()), CycloContext::get(den));
    const auto rhs = PiSeries::monomial(ph, Rational(-p.s - Q(1, 2)), k1) * theta_at_point(0, ch, p, o + 2, k1);
    CHECK(same(lhs, rhs));
  }
}

TEST_CASE("heat equation and triple product on random characteristics") {
  std::mt19937_64 rng(3);
  const Rational o(10);
  for (int trial = 0; trial < 60; ++trial) {
    const ThetaChar ch{random_rational(rng, 2, 4), random_rational(rng, 2, 4)};
    const RationalPoint p{random_rational(rng, 1, 4), random_rational(rng, 1, 3)};
    // Along z = r + s tau the chain rule adds -4 pi i s theta^(j+1).
    const auto four_i_s = zeta(1, 4) * Rational(4 * p.s);
    for (unsigned j = 0; j <= 2; ++j) {
      const auto rhs = scale(theta_q(theta_at_point(j, ch, p, o, k1)), Rational(-8), 2) -
                       scale(theta_at_point(j + 1, ch, p, o, k1), four_i_s, 1);
      CHECK(same(theta_at_point(j + 2, ch, p, o, k1), rhs));
    }
    if (trial % 3 == 0) CHECK(same(theta_triple_product(ch, o, k1), theta_deriv(0, ch, o, k1)));
  }
}

TEST_CASE("log derivative formulas against Taylor-series division") {
  // f(z) = sum f_k z^k / k!; (log f)^(n)(0) = (n - 1)! [z^(n-1)] f'/f.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> f(6);
    for (auto& x : f) x = random_rational(rng, 6, 5);
    if (sgn(f[0]) == 0) f[0] = 1;
    std::vector<Rational> taylor(6), deriv(5), quot(5);
    for (int k = 0; k < 6; ++k) taylor[k] = f[k] / factorial(k);
    for (int k = 0; k < 5; ++k) deriv[k] = taylor[k + 1] * (k + 1);
    for (int k = 0; k < 5; ++k) {
      Rational s = deriv[k];
      for (int i = 1; i <= k; ++i) s -= taylor[i] * quot[k - i];
      quot[k] = s / taylor[0];
    }
    std::vector<Rational> t(6);
    for (int k = 0; k < 6; ++k) t[k] = f[k] / f[0];
    for (int n = 1; n <= 5; ++n) {
      const Rational expected = factorial(n - 1) * quot[n - 1];
      CHECK(log_deriv_from_ratios(n, t) == expected);
      Rational f0n = 1;
      for (int k = 0; k < n; ++k) f0n *= f[0];
      CHECK(log_deriv_cleared(n, f) == expected * f0n);
    }
  }
  CHECK_THROWS_AS(log_deriv_from_ratios(6, std::vector<Rational>(7, Rational(1))), std::out_of_range);
}

TEST_CASE("log_deriv on theta") {
  const Rational o(6);
  const ThetaChar ch{Q(1), Q(1)};
  const RationalPoint p{Q(1, 5), Q(0)};
  const auto d1 = log_deriv(1, ch, p, o, k1);
  CHECK(d1.pi_grade() == 1);
  CHECK(same(d1 * theta_at_point(0, ch, p, o, k1), theta_at_point(1, ch, p, o, k1)));
  CHECK(log_deriv(3, ch, p, o, k1).pi_grade() == 3);
  CHECK_THROWS_AS(log_deriv(1, ch, {Q(0), Q(0)}, o, k1), PointIsZero);
  CHECK_THROWS_AS(log_deriv(1, ch, {Q(1), Q(0)}, o, k1), PointIsZero);
  CHECK_THROWS_AS(log_deriv(0, ch, p, o, k1), Error);
}

TEST_CASE("cyclotomic cap") {
  const auto saved = cyclo_order_cap();
  set_cyclo_order_cap(12);
  CHECK_THROWS_AS(theta_at_point(0, {Q(1, 3), Q(1)}, {Q(1, 7), Q(0)}, Rational(3), k1), ContextMismatch);
  CHECK_NOTHROW(theta_at_point(0, {Q(0), Q(0)}, {Q(1, 4), Q(0)}, Rational(3), k1));
  set_cyclo_order_cap(saved);
}

TEST_CASE("Jacobi derivative and eta cube") {
  const Rational o(30);
  const auto tp = theta_deriv(1, {Q(1), Q(1)}, o, k1);
  const auto prod =
      theta_deriv(0, {Q(0), Q(0)}, o, k1) * theta_deriv(0, {Q(1), Q(0)}, o, k1) * theta_deriv(0, {Q(0), Q(1)}, o, k1);
  CHECK(same(tp, scale(prod, Rational(-1), 1)));
  CHECK(same(tp, scale(pow(eta(Rational(1), o, k1), 3), Rational(-2), 1)));
  CHECK_FALSE(same(tp, scale(pow(eta(Rational(1), o, k1), 3), Rational(2), 1)));
}

TEST_CASE("cubic identity with cyclotomic phases") {
  const Rational o(20);
  const auto a = pow(theta_deriv(0, {Q(1, 3), Q(1, 3)}, o, k1), 3);
  const auto b = pow(theta_deriv(0, {Q(1, 3), Q(5, 3)}, o, k1), 3);
  CHECK(same(a + b, pow(theta_deriv(0, {Q(1, 3), Q(1)}, o, k1), 3)));
  CHECK(same(scale(a, zeta(1, 6)) + scale(b, zeta(1, 3)), pow(theta_deriv(0, {Q(1), Q(1, 3)}, o, k1), 3)));
  CHECK_FALSE(same(scale(a, zeta(1, 3)) + scale(b, zeta(1, 6)), pow(theta_deriv(0, {Q(1), Q(1, 3)}, o, k1), 3)));
}
