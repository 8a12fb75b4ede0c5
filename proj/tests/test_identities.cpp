#include <set>

#include "cubictheta/errors.hpp"
#include "cubictheta/generators.hpp"
#include "cubictheta/identities.hpp"
#include "cubictheta/theta.hpp"
#include "doctest.h"

using namespace cubictheta;

namespace {

const SeriesContext k1{1, 1};

Rational Q(long p, long q = 1) { return make_rational(p, q); }

CycloNumber zeta(std::int64_t k, std::int64_t n) { return CycloNumber::root_of_unity(k, CycloContext::get(n)); }

// Adds `delta` to the coefficient of q^e in every series drawn from `source`.
Tamper bump(std::string source, Rational e, long delta = 1) {
  return [=](std::string_view name, PiSeries s) {
    if (name != source) return s;
    return s + PiSeries::monomial(Rational(delta), e, k1).truncated(*s.trunc_exponent());
  };
}

}  // namespace

TEST_CASE("registry ids are unique and every category is populated") {
  const auto& reg = registry();
  CHECK(reg.size() >= 60);
  std::set<std::string> ids;
  std::set<Category> cats;
  for (const auto& r : reg) {
    CHECK(ids.insert(r.id).second);
    cats.insert(r.category);
    CHECK_FALSE(r.description.empty());
    CHECK_FALSE(r.anchor.empty());
  }
  CHECK(cats.size() == 5);
  for (const char* id : {"thm11.P", "ramanujan-cubic", "heat.family", "thm82.ramanujan", "prop91.id2", "thm31.d5"})
    CHECK(ids.count(id) == 1);
  CHECK_THROWS_AS(find_identity("nosuch"), UnknownIdentity);
  CHECK(parse_category("theta-const") == Category::theta_const);
  CHECK_THROWS_AS(parse_category("nosuch"), UnknownIdentity);
}

TEST_CASE("verify examples") {
  const auto p = verify("thm11.P", 40);
  CHECK(p.pass);
  CHECK(p.achieved_order >= 40);
  CHECK_FALSE(p.first_discrepancy);
  CHECK(verify("ramanujan-cubic", 40).pass);
  CHECK(verify("thm82.ramanujan", 60).pass);
  CHECK_THROWS_AS(verify("nosuch", 10), UnknownIdentity);
  const auto j = report_to_json(p);
  CHECK(j["verdict"] == "pass");
  CHECK(j["first_discrepancy"].is_null());
  CHECK(j["requested_order"] == 40);
}

TEST_CASE("fault injection: one perturbed generator coefficient is caught") {
  const auto af = verify(find_identity("a.forms"), 30, bump("a", Q(5)));
  CHECK_FALSE(af.pass);
  REQUIRE(af.first_discrepancy);
  CHECK(af.first_discrepancy->exponent == 5);
  CHECK(report_to_json(af)["first_discrepancy"]["exponent"] == "5");

  const auto p = verify(find_identity("thm11.P"), 30, bump("a", Q(5)));
  CHECK_FALSE(p.pass);
  REQUIRE(p.first_discrepancy);
  CHECK(p.first_discrepancy->exponent == 5);
  CHECK_FALSE(verify(find_identity("thm11.P"), 30, bump("b3", Q(7))).pass);

  const auto r = verify(find_identity("thm82.ramanujan"), 30, bump("eta", Q(97, 24)));
  CHECK_FALSE(r.pass);
  CHECK_FALSE(verify(find_identity("thm82.ramanujan"), 30, bump("a", Q(3))).pass);

  // Perturbing far beyond the order changes nothing.
  CHECK(verify(find_identity("a.forms"), 20, bump("a", Q(25))).pass);
}

TEST_CASE("sign flips in the level-three system fail at the first affected coefficient") {
  const Rational o(40);
  const auto P = a_lattice(o, k1), Qs = eisenstein(2, 1, o, k1), R = eta_quotient(b3_spec(), o, k1);
  const auto lhsP = scale(theta_q(P), Rational(12));
  const auto good = scale(pow(P, 3), Rational(3)) + P * Qs - scale(R, Rational(4));
  const auto bad = scale(pow(P, 3), Rational(3)) + P * Qs + scale(R, Rational(4));
  CHECK(equal_to_order(lhsP, good).equal);
  const auto cmpP = equal_to_order(lhsP, bad);
  CHECK_FALSE(cmpP.equal);
  CHECK(cmpP.first_discrepancy->exponent == 0);

  const auto rhsR = Qs * R - pow(P, 2) * R;
  CHECK(equal_to_order(scale(theta_q(R), Rational(4)), rhsR).equal);
  const auto cmpR = equal_to_order(scale(theta_q(R), Rational(-4)), rhsR);
  CHECK_FALSE(cmpR.equal);
  CHECK(cmpR.first_discrepancy->exponent == 1);
}

TEST_CASE("printed forms that do not hold") {
  const Rational o(20);
  // a(q) eta(tau) against eta^3(tau/3) + 3 eta(3tau), without the cube.
  const auto lhs = a_lattice(o, k1) * eta(Rational(1), o, k1);
  const auto third = pow(substitute_power(eta(Rational(1), 3 * o, k1), Q(1, 3)), 3);
  CHECK_FALSE(equal_to_order(lhs, third + scale(eta(Rational(3), o, k1), Rational(3))).equal);
  CHECK(equal_to_order(lhs, third + scale(pow(eta(Rational(3), o, k1), 3), Rational(3))).equal);

  // The second two-variable identity with a plus sign between its terms.
  const RationalPoint z{Q(1, 5), Q(1, 7)};
  auto th = [&](long e1, long d1, long e2, long d2, const RationalPoint& p) {
    return theta_at_point(0, {Q(e1, d1), Q(e2, d2)}, p, o, k1);
  };
  const RationalPoint zero{Q(0), Q(0)};
  const auto first = pow(th(1, 3, 5, 3, zero), 2) * th(1, 3, 1, 3, z) * th(5, 3, 5, 3, z);
  const auto second = pow(th(1, 3, 1, 3, zero), 2) * th(1, 3, 5, 3, z) * th(5, 3, 1, 3, z);
  const auto rhs = scale(th(1, 3, 1, 1, zero) * th(1, 1, 1, 3, zero) * pow(th(1, 1, 1, 1, z), 2), zeta(1, 3));
  CHECK(equal_to_order(first - second, rhs).equal);
  CHECK_FALSE(equal_to_order(first + second, rhs).equal);
}

TEST_CASE("grade soundness and error reporting") {
  // Raising the grade of every theta input breaks homogeneity in a mixed identity.
  const auto rep = verify(find_identity("prop41.a"), 10, [](std::string_view name, PiSeries s) {
    return name == "theta" ? scale(s, Rational(1), 1) : s;
  });
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.error.empty());
  CHECK(report_to_json(rep).contains("error"));
}

TEST_CASE("monotonicity: passing at an order passes below it") {
  for (const char* id : {"thm11.Q", "prop42.1/31/3", "g2.rel", "thm52.J", "farkas.id"})
    for (std::int64_t o : {24, 13, 7, 2}) {
      INFO(id << " at " << o);
      CHECK(verify(id, o).pass);
    }
}

TEST_CASE("verify_all is deterministic across job counts") {
  const auto one = verify_all(12, std::nullopt, 1);
  const auto three = verify_all(12, std::nullopt, 3);
  REQUIRE(one.size() == registry().size());
  REQUIRE(three.size() == one.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].id == registry()[i].id);
    CHECK(one[i].id == three[i].id);
    CHECK(one[i].pass == three[i].pass);
    CHECK(one[i].achieved_order == three[i].achieved_order);
  }
  const auto sampled = verify_all(8, Category::sampled_point, 2);
  CHECK(sampled.size() == 5);
  for (const auto& r : sampled) CHECK(r.pass);
}
