#include <random>

#include "cubictheta/cyclo.hpp"
#include "cubictheta/errors.hpp"
#include "doctest.h"

using namespace cubictheta;

namespace {

int mobius(std::int64_t n) {
  int sign = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// Phi_N = prod_{d | N} (x^d - 1)^mu(N/d), as a power series in x truncated
// past degree phi(N). Independent of the division route in the library.
std::vector<Integer> cyclotomic_by_mobius(std::int64_t n) {
  const auto deg = static_cast<std::size_t>(euler_phi(n));
  std::vector<Integer> p(deg + 1);
  p[0] = 1;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    // Multiply by (1 - x^d)^mu; the overall sign is fixed at the end.
    const auto sd = static_cast<std::size_t>(d);
    if (mu == 1) {
      for (auto k = deg; k >= sd; --k) p[k] -= p[k - sd];
    } else {
      for (std::size_t k = sd; k <= deg; ++k) p[k] += p[k - sd];
    }
  }
  if (p[deg] < 0)
    for (auto& c : p) c = -c;
  return p;
}

CycloNumber random_element(std::mt19937_64& rng, const CycloContext::Ptr& ctx, int density = 4) {
  std::uniform_int_distribution<int> deg(0, ctx->phi() - 1), num(-9, 9), den(1, 5);
  std::vector<Rational> c(static_cast<std::size_t>(ctx->phi()));
  for (int i = 0; i < density; ++i) c[static_cast<std::size_t>(deg(rng))] = Rational(num(rng), den(rng));
  return CycloNumber::from_coeffs(ctx, c);
}

CycloNumber z(std::int64_t k, std::int64_t n) { return CycloNumber::root_of_unity(k, CycloContext::get(n)); }

CycloNumber q(long v, std::int64_t n = 72) { return CycloNumber(CycloContext::get(n), Rational(v)); }

}  // namespace

TEST_CASE("cyclotomic polynomial of order 72 is x^24 - x^12 + 1") {
  const IntPoly expected = [] {
    IntPoly p(25, 0);
    p[0] = 1;
    p[12] = -1;
    p[24] = 1;
    return p;
  }();
  CHECK(cyclotomic_polynomial(72) == expected);
  const auto oracle = cyclotomic_by_mobius(72);
  REQUIRE(oracle.size() == 25);
  for (std::size_t k = 0; k < 25; ++k) CHECK(oracle[k] == expected[k]);
}

TEST_CASE("division and Mobius routes agree; degree is the totient") {
  for (std::int64_t n : {1, 2, 3, 4, 5, 6, 12, 30, 36, 105, 180, 210, 360, 504, 2520}) {
    const auto p = cyclotomic_polynomial(n);
    CHECK(static_cast<std::int64_t>(p.size()) - 1 == euler_phi(n));
    const auto oracle = cyclotomic_by_mobius(n);
    REQUIRE(oracle.size() == p.size());
    for (std::size_t k = 0; k < p.size(); ++k) CHECK(oracle[k] == p[k]);
  }
}

TEST_CASE("cyclo_poly divides x^N - 1 and vanishes at zeta_N") {
  for (std::int64_t n : {72, 360, 2520}) {
    auto ctx = CycloContext::get(n);
    // zeta^N == 1
    CHECK(CycloNumber::root_of_unity(n, ctx).is_one());
    std::vector<Rational> at_zeta;
    for (auto c : ctx->cyclo_poly()) at_zeta.emplace_back(c);
    CHECK(CycloNumber::from_coeffs(ctx, at_zeta).is_zero());
  }
}

TEST_CASE("root_of_unity examples") {
  CHECK(z(0, 72).is_one());
  CHECK(z(12, 72) + z(60, 72) == q(1));
  const auto sqrt3 = z(6, 72) + z(66, 72);
  CHECK(sqrt3 * sqrt3 == q(3));
  CHECK(z(-1, 72) == z(71, 72));
  CHECK(z(1, 2) == q(-1));
  CHECK(z(-3, 4) == z(1, 4));
}

TEST_CASE("every power of zeta_N matches repeated multiplication, N <= 90") {
  for (std::int64_t n = 1; n <= 90; ++n) {
    const auto ctx = CycloContext::get(n);
    const auto g = CycloNumber::root_of_unity(1, ctx);
    CycloNumber p(ctx, 1L);
    for (std::int64_t k = 0; k < n; ++k) {
      CHECK(CycloNumber::root_of_unity(k, ctx) == p);
      CHECK(CycloNumber::root_of_unity(k - n, ctx) == p);
      p = p * g;
    }
    CHECK(p.is_one());
  }
}

TEST_CASE("field operations") {
  const auto a = z(5, 72) * Rational(3, 7) + q(2);
  CHECK(a + q(0) == a);
  CHECK(a * q(1) == a);
  CycloNumber p = q(1);
  const auto zeta = z(1, 72);
  for (int i = 0; i < 72; ++i) p = p * zeta;
  CHECK(p.is_one());
  CHECK(a - a == q(0));
  CHECK((-a) + a == q(0));
}

TEST_CASE("inverse examples and errors") {
  CHECK(q(1).inverse() == q(1));
  for (int k : {1, 5, 23, 24, 50}) CHECK(z(k, 72).inverse() == z(72 - k, 72));
  CHECK(q(2).inverse() == CycloNumber(CycloContext::get(72), Rational(1, 2)));
  CHECK_THROWS_AS(q(0).inverse(), DivisionByZero);
}

TEST_CASE("lift examples and errors") {
  CHECK(z(1, 6).lift(72) == z(12, 72));
  CHECK(q(1, 6).lift(360).is_one());
  const auto s = (z(1, 12) + z(11, 12)).lift(72);
  CHECK(s * s == q(3));
  CHECK_THROWS_AS(z(1, 5).lift(72), NotAnExtension);
}

TEST_CASE("mixed orders: nested lift automatically, otherwise ContextMismatch") {
  CHECK(z(1, 6) * z(1, 12) == z(3, 12));
  CHECK_THROWS_AS(z(1, 5) + z(1, 7), ContextMismatch);
}

TEST_CASE("approx_complex") {
  auto c = q(1).approx_complex();
  CHECK(c.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(c.imag()) < 1e-12);
  c = z(1, 4).approx_complex();
  CHECK(std::abs(c.real()) < 1e-12);
  CHECK(c.imag() == doctest::Approx(1.0).epsilon(1e-12));
  c = (z(1, 12) + z(11, 12)).approx_complex();
  CHECK(std::abs(c.real() - 1.7320508075688772) < 1e-12);
  CHECK(std::abs(c.imag()) < 1e-12);
}

TEST_CASE("ring axioms on randomized triples") {
  std::mt19937_64 rng(20261017);
  for (std::int64_t n : {72, 360}) {
    auto ctx = CycloContext::get(n);
    for (int i = 0; i < 200; ++i) {
      const auto a = random_element(rng, ctx), b = random_element(rng, ctx), c = random_element(rng, ctx);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
    }
  }
}

TEST_CASE("inverse is two-sided on 1000 random nonzero elements") {
  std::mt19937_64 rng(7);
  auto ctx = CycloContext::get(72);
  int checked = 0;
  while (checked < 1000) {
    const auto a = random_element(rng, ctx, 1 + checked % 6);
    if (a.is_zero()) continue;
    const auto inv = a.inverse();
    CHECK((a * inv).is_one());
    CHECK((inv * a).is_one());
    ++checked;
  }
}

TEST_CASE("lift is a ring homomorphism") {
  std::mt19937_64 rng(11);
  auto ctx = CycloContext::get(12);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_element(rng, ctx, 3), b = random_element(rng, ctx, 3);
    CHECK((a * b).lift(360) == a.lift(360) * b.lift(360));
    CHECK((a + b).lift(360) == a.lift(360) + b.lift(360));
  }
}

TEST_CASE("canonical zero iff floating value vanishes (smoke)") {
  std::mt19937_64 rng(3);
  auto ctx = CycloContext::get(72);
  for (int i = 0; i < 300; ++i) {
    const auto a = random_element(rng, ctx);
    const auto b = i % 3 == 0 ? a : random_element(rng, ctx);
    const auto d = a - b;
    CHECK(d.is_zero() == (std::abs(d.approx_complex()) < 1e-9));
  }
}

TEST_CASE("add_product matches plain product") {
  std::mt19937_64 rng(5);
  auto ctx = CycloContext::get(72);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_element(rng, ctx), b = random_element(rng, ctx), c = random_element(rng, ctx);
    CycloNumber acc = c;
    CycloNumber::add_product(acc, a, b);
    CHECK(acc == c + a * b);
  }
}
