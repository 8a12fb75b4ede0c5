#include <map>

#include "cubictheta/arith.hpp"
#include "cubictheta/errors.hpp"
#include "cubictheta/generators.hpp"
#include "cubictheta/series_json.hpp"
#include "doctest.h"

using namespace cubictheta;

namespace {

const SeriesContext k1{1, 1};

Rational c(const PiSeries& f, std::int64_t num, std::int64_t den = 1) {
  const auto x = f.coefficient(make_rational(num, den));
  REQUIRE(x.is_rational());
  return x.rational_part();
}

std::vector<Rational> ints(const PiSeries& f, std::int64_t from, std::int64_t to) {
  std::vector<Rational> out;
  for (auto n = from; n <= to; ++n) out.push_back(c(f, n));
  return out;
}

std::vector<Rational> R(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// Number of (m, n) with m^2 + mn + n^2 = N, by brute force.
long lattice_count(long N) {
  long count = 0;
  for (long m = -N - 1; m <= N + 1; ++m)
    for (long n = -N - 1; n <= N + 1; ++n)
      if (m * m + m * n + n * n == N) ++count;
  return count;
}

// Euler's pentagonal theorem: prod (1 - q^n) = sum (-1)^k q^(k(3k-1)/2).
std::map<long, long> pentagonal(long bound) {
  std::map<long, long> out;
  for (long k = -bound; k <= bound; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e < bound) out[e] += (k % 2 == 0) ? 1 : -1;
  }
  return out;
}

}  // namespace

TEST_CASE("arith helpers") {
  CHECK(legendre3(1) == 1);
  CHECK(legendre3(2) == -1);
  CHECK(legendre3(-1) == -1);
  CHECK(legendre3(9) == 0);
  CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(sigma(1, Rational(1)) == 1);
  CHECK(sigma(1, Rational(6)) == 12);
  CHECK(sigma(3, Rational(2)) == 9);
  CHECK(sigma(1, make_rational(3, 3)) == 1);
  CHECK(sigma(1, make_rational(2, 3)) == 0);
  CHECK(sigma(1, Rational(0)) == 0);
  CHECK(d_mod(1, 3, Rational(7)) == 2);
  CHECK(d_mod(2, 3, Rational(2)) == 1);
  CHECK(twisted_divisor_sum(2, 2, true) == 1 - 4);
  CHECK(twisted_divisor_sum(2, 2, false) == -1 + 4);
}

TEST_CASE("a(q) by lattice and divisor forms") {
  const auto a = a_lattice(Rational(8), k1);
  CHECK(ints(a, 0, 7) == R({1, 6, 0, 6, 6, 0, 0, 12}));
  const auto al = a_lattice(Rational(300), k1), ad = a_divisor(Rational(300), k1);
  CHECK(equal_to_order(al, ad).equal);
  for (long n = 0; n < 60; ++n) CHECK(c(al, n) == lattice_count(n));
}

TEST_CASE("Eisenstein series") {
  CHECK(ints(eisenstein(2, 1, Rational(4), k1), 0, 3) == R({1, -24, -72, -96}));
  CHECK(ints(eisenstein(4, 1, Rational(3), k1), 0, 2) == R({1, 240, 2160}));
  CHECK(ints(eisenstein(6, 1, Rational(3), k1), 0, 2) == R({1, -504, -16632}));
  const auto e2q3 = eisenstein(2, 3, Rational(7), k1);
  CHECK(ints(e2q3, 0, 6) == R({1, 0, 0, -24, 0, 0, -72}));
  CHECK_THROWS_AS(eisenstein(8, 1, Rational(3), k1), Error);
}

TEST_CASE("eta against the pentagonal theorem") {
  const long bound = 80;
  const auto e = eta(Rational(1), Rational(bound) + make_rational(1, 24), k1);
  const auto p = pentagonal(bound);
  for (long n = 0; n < bound; ++n) {
    const auto it = p.find(n);
    CHECK(c(e, 24 * n + 1, 24) == (it == p.end() ? 0 : it->second));
  }
  CHECK(e.lead_exponent() == make_rational(1, 24));
  const auto e3 = eta(Rational(3), Rational(10), k1);
  CHECK(e3.lead_exponent() == make_rational(1, 8));
  CHECK(c(e3, 1, 8) == 1);
  CHECK(c(e3, 25, 8) == -1);
}

TEST_CASE("eta quotient grammar") {
  const auto b = EtaQuotientSpec::parse("1^9*3^-3");
  CHECK(b.leading_exponent() == 0);
  CHECK(ints(eta_quotient(b, Rational(4), k1), 0, 3) == R({1, -9, 27, -9}));
  const auto cc = EtaQuotientSpec::parse("27*3^9*1^-3");
  CHECK(cc.scalar == 27);
  CHECK(cc.leading_exponent() == 1);
  CHECK(ints(eta_quotient(cc, Rational(4), k1), 1, 3) == R({27, 81, 243}));
  const auto shifted = EtaQuotientSpec::parse("q^{1/3}*1^1");
  CHECK(shifted.shift == make_rational(1, 3));
  CHECK(shifted.leading_exponent() == make_rational(3, 8));
  const auto half = EtaQuotientSpec::parse("1/2^2");
  CHECK(half.factors.size() == 1);
  CHECK(half.factors[0].multiplier == make_rational(1, 2));
  CHECK(EtaQuotientSpec::parse(cc.to_string()).to_string() == cc.to_string());
  for (const char* bad : {"", "1^x", "3^", "0^1", "-1^2", "1^9**3^-3", "q^{1/0}", "1^9*", "abc"})
    CHECK_THROWS_AS(EtaQuotientSpec::parse(bad), ParseError);
}

TEST_CASE("b^3 and c^3 divisor series match the eta forms") {
  const Rational o(200);
  CHECK(equal_to_order(eta_quotient(b3_spec(), o, k1), b_cubed_series(o, k1)).equal);
  CHECK(equal_to_order(eta_quotient(c3_spec(), o, k1), c_cubed_series(o, k1)).equal);
}

TEST_CASE("Huber series against direct divisor loops") {
  const long bound = 60;
  const auto P = huber_P_script(Rational(bound), k1);
  const auto Pc = huber_P_cal(Rational(bound), k1);
  CHECK(c(P, 0) == 1);
  CHECK(c(Pc, 0) == 0);
  for (long N = 1; N < bound; ++N) {
    Rational ps = 0, pc = 0;
    for (long d = 1; d <= N; ++d) {
      if (N % d != 0) continue;
      // cos(2 pi d / 3) is 1 when 3 | d and -1/2 otherwise.
      ps += d % 3 == 0 ? Rational(-6 * d) : Rational(3 * d);
      if ((N / d) % 3 != 0) pc += 9 * d;
    }
    CHECK(c(P, N) == ps);
    CHECK(c(Pc, N) == pc);
  }
}

TEST_CASE("closed forms of a^k against convolution") {
  const Rational o(120);
  const auto a = a_lattice(o, k1);
  auto ak = a;
  for (int k = 1; k <= 6; ++k) {
    INFO("k = " << k);
    CHECK(equal_to_order(ak, a_power_closed_form(k, o, k1)).equal);
    ak = ak * a;
  }
  CHECK(c(a_power_closed_form(2, Rational(4), k1), 3) == 12);
  CHECK_THROWS_AS(a_power_closed_form(7, o, k1), Error);
}

TEST_CASE("level-nine product series") {
  const auto e10 = eta10_series(Rational(10), k1);
  CHECK(ints(e10, 0, 3) == R({1, 3, 9, 12}));
  const auto e339 = eta339_series(Rational(8), k1);
  CHECK(ints(e339, 0, 7) == R({0, 1, -3, 0, 7, -6, 0, 8}));
}

TEST_CASE("j-invariant") {
  const auto j = j_invariant(Rational(4), k1);
  CHECK(j.lead_exponent() == -1);
  CHECK(c(j, -1) == 1);
  CHECK(c(j, 0) == 744);
  CHECK(c(j, 1) == 196884);
  CHECK(c(j, 2) == 21493760);
  CHECK(c(j, 3) == 864299970);
}

TEST_CASE("residue products and Pochhammer symbols") {
  const auto r = residue_product(Rational(1), Rational(3), Rational(9), k1);
  // (1 - q)(1 - q^4)(1 - q^7)
  CHECK(ints(r, 0, 8) == R({1, -1, 0, 0, -1, 1, 0, -1, 1}));
  const auto p = q_pochhammer(Rational(2), Rational(9), k1);
  CHECK(ints(p, 0, 8) == R({1, 0, -1, 0, -1, 0, 0, 0, 0}));
}

TEST_CASE("generators are grade 0, rational, and known below the order") {
  const Rational o(30);
  for (const auto& f : {a_lattice(o, k1), a_divisor(o, k1), eisenstein(2, 1, o, k1), eisenstein(4, 3, o, k1),
                        eta(Rational(1), o, k1), eta_quotient(b3_spec(), o, k1), eta_quotient(c3_spec(), o, k1),
                        b_cubed_series(o, k1), c_cubed_series(o, k1), huber_P_script(o, k1), huber_P_cal(o, k1),
                        a_sq_b3_series(o, k1), a_sq_c3_series(o, k1), eta10_series(o, k1), eta339_series(o, k1),
                        j_invariant(o, k1)}) {
    CHECK(f.pi_grade() == 0);
    CHECK(f.is_rational());
    REQUIRE(f.trunc_exponent());
    CHECK(*f.trunc_exponent() >= o);
  }
}

TEST_CASE("series JSON round trip") {
  for (const auto& f : {eta(Rational(1), Rational(6), k1), j_invariant(Rational(3), k1),
                        PiSeries::monomial(CycloNumber::root_of_unity(1, CycloContext::get(12)), make_rational(1, 3),
                                           SeriesContext{3, 12}, 2)}) {
    const auto j = series_to_json(f);
    const auto g = series_from_json(nlohmann::json::parse(j.dump()));
    CHECK(g.pi_grade() == f.pi_grade());
    CHECK(g.trunc() == f.trunc());
    CHECK(equal_to_order(f, g).equal);
    CHECK(series_to_json(g) == j);
  }
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"pi_grade": 0})")), ParseError);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"([1, 2])")), ParseError);
}
