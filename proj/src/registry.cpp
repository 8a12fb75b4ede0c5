// The identity registry. Every builder returns exact (lhs, rhs) pairs; identities
// carrying a theta or discriminant denominator are cleared of it first.

#include <map>
#include <optional>
#include <tuple>

#include "cubictheta/errors.hpp"
#include "cubictheta/generators.hpp"
#include "cubictheta/identities.hpp"
#include "cubictheta/theta.hpp"

namespace cubictheta {

namespace {

// Minimal context; every generator widens it to what it needs.
const SeriesContext k1{1, 1};

using Members = std::vector<Member>;

Rational R(long p, long q = 1) { return make_rational(p, q); }

CycloNumber zeta(std::int64_t k, std::int64_t n) { return CycloNumber::root_of_unity(k, CycloContext::get(n)); }

// 2 cos(pi/6)
CycloNumber sqrt3() { return zeta(1, 12) + zeta(11, 12); }

PiSeries sc(const PiSeries& f, const Rational& c, int dpi = 0) { return scale(f, c, dpi); }
PiSeries sc(const PiSeries& f, const CycloNumber& c, int dpi = 0) { return scale(f, c, dpi); }

// Input series, each routed through the tamper hook under a stable name.
struct Inputs {
  const BuildEnv& env;
  Rational order;

  explicit Inputs(const BuildEnv& e) : env(e), order(e.order) {}

  PiSeries a(const Rational& o) const { return env.use("a", a_lattice(o, k1)); }
  PiSeries a() const { return a(order); }
  PiSeries a_div() const { return env.use("a_divisor", a_divisor(order, k1)); }
  PiSeries E(int k, std::int64_t m = 1) const {
    return env.use("E" + std::to_string(k), eisenstein(k, m, order, k1));
  }
  PiSeries b3() const { return env.use("b3", eta_quotient(b3_spec(), order, k1)); }
  PiSeries c3() const { return env.use("c3", eta_quotient(c3_spec(), order, k1)); }
  PiSeries b3_div() const { return env.use("b3_divisor", b_cubed_series(order, k1)); }
  PiSeries c3_div() const { return env.use("c3_divisor", c_cubed_series(order, k1)); }
  PiSeries eta(const Rational& m, const Rational& o) const { return env.use("eta", cubictheta::eta(m, o, k1)); }
  PiSeries eq(const EtaQuotientSpec& s) const { return env.use("eta_quotient", eta_quotient(s, order, k1)); }
  PiSeries th(unsigned j, const ThetaChar& ch, const RationalPoint& p = {}) const {
    return env.use("theta", theta_at_point(j, ch, p, order, k1));
  }
  PiSeries th(unsigned j, const ThetaChar& ch, const Rational& o) const {
    return env.use("theta", theta_at_point(j, ch, {}, o, k1));
  }
};

const ThetaChar c11{R(1), R(1)};
const ThetaChar c1_13{R(1), R(1, 3)};
const ThetaChar c13_1{R(1, 3), R(1)};
const ThetaChar c13_13{R(1, 3), R(1, 3)};
const ThetaChar c13_53{R(1, 3), R(5, 3)};

const std::vector<ThetaChar>& registry_chars() {
  static const std::vector<ThetaChar> chars{{R(0), R(0)}, {R(1), R(0)}, {R(0), R(1)}, c1_13, c13_1, c13_13, c13_53};
  return chars;
}

const std::vector<RationalPoint>& sample_points() {
  static const std::vector<RationalPoint> pts{
      {R(1, 5), R(0)}, {R(0), R(1, 5)}, {R(1, 5), R(1, 7)}, {R(2, 7), R(1, 5)}, {R(1, 4), R(1, 6)}};
  return pts;
}

// --- X, Y, Z relations --------------------------------------------------------
//
// X = theta'/theta, Y = theta'''[1,1]/theta'[1,1], Z = s theta'[1,1]^3/theta^3.
// A polynomial sum c X^x Y^y Z^z is compared after multiplying through by
// theta^A theta'[1,1]^B.

struct Mono {
  Rational c;
  unsigned x, y, z;
};

struct XYZ {
  PiSeries t0, t1, y3, tp;
  int s;

  PiSeries power(const PiSeries& f, unsigned n) const { return n == 0 ? PiSeries::constant(Rational(1), k1) : pow(f, n); }

  // sum c X^x Y^y Z^z times theta^A tp^B.
  PiSeries cleared(const std::vector<Mono>& poly, unsigned A, unsigned B) const {
    std::optional<PiSeries> acc;
    for (const auto& m : poly) {
      const Rational c = (s < 0 && m.z % 2 == 1) ? Rational(-m.c) : m.c;
      const auto term = power(t1, m.x) * power(y3, m.y) * power(tp, 3 * m.z + B - m.y) * power(t0, A - m.x - 3 * m.z);
      acc = acc ? *acc + sc(term, c) : sc(term, c);
    }
    return *acc;
  }
};

XYZ make_xyz(const Inputs& in, const ThetaChar& ch, int s) {
  return {in.th(0, ch), in.th(1, ch), in.th(3, c11), in.th(1, c11), s};
}

std::pair<unsigned, unsigned> degrees(const std::vector<Mono>& poly) {
  unsigned A = 1, B = 0;
  for (const auto& m : poly) {
    A = std::max(A, m.x + 3 * m.z);
    B = std::max(B, m.y);
  }
  return {A, B};
}

const std::map<int, std::vector<Mono>>& derivative_polys() {
  static const std::map<int, std::vector<Mono>> polys{
      {2, {{R(1, 3), 0, 1, 0}, {R(-2), 2, 0, 0}}},
      {3, {{R(-8), 3, 0, 0}, {R(1), 1, 1, 0}, {R(1), 0, 0, 1}}},
      {4, {{R(10), 4, 0, 0}, {R(-4), 2, 1, 0}, {R(-2), 1, 0, 1}, {R(1, 3), 0, 2, 0}}},
      {5,
       {{R(106), 5, 0, 0}, {R(-80, 3), 3, 1, 0}, {R(-14), 2, 0, 1}, {R(5, 3), 1, 2, 0}, {R(10, 3), 0, 1, 1}}},
  };
  return polys;
}

Members xyz_derivative(const Inputs& in, const ThetaChar& ch, int s, int k) {
  const auto xyz = make_xyz(in, ch, s);
  const auto& poly = derivative_polys().at(k);
  const auto [A, B] = degrees(poly);
  const auto lhs = in.th(static_cast<unsigned>(k), ch) * xyz.power(xyz.t0, A - 1) * xyz.power(xyz.tp, B);
  // Clearing by theta'[1,1]^B raises the grade by B.
  return {{"theta^(" + std::to_string(k) + ")/theta", lhs, xyz.cleared(poly, A, B), k + static_cast<int>(B)}};
}

const std::vector<Mono> g2_poly{{R(108), 4, 0, 0}, {R(-12), 1, 0, 1}};
const std::vector<Mono> g3_poly{{R(-216), 6, 0, 0}, {R(36), 3, 0, 1}, {R(-1), 0, 0, 2}};

Member weierstrass_member(const Inputs& in, const std::string& label, const ThetaChar& ch, int s,
                          const std::vector<Mono>& poly, const PiSeries& rhs_form) {
  const auto xyz = make_xyz(in, ch, s);
  const auto [A, B] = degrees(poly);
  return {label, xyz.cleared(poly, A, B), rhs_form * xyz.power(xyz.t0, A) * xyz.power(xyz.tp, B)};
}

// --- helpers for the level-three forms ---------------------------------------

PiSeries farkas_denominator(const Inputs& in) {
  return sc(pow(in.th(0, c13_13), 3), zeta(1, 6)) + pow(in.th(0, c13_1), 3) +
         sc(pow(in.th(0, c13_53), 3), zeta(5, 6));
}

PiSeries farkas_product(const Inputs& in) {
  return in.env.use("residue_product",
                    residue_product(R(1), R(3), in.order, k1) * residue_product(R(2), R(3), in.order, k1));
}

// theta[1/3,1](0, 3 tau)
PiSeries theta_at_3tau(const Inputs& in) {
  const Rational o = in.order / 3 + 1;
  return substitute_power(in.th(0, c13_1, o), Rational(3)).truncated(in.order);
}

RationalPoint times(const RationalPoint& p, long k) { return {p.r * k, p.s * k}; }

Members prop91(const Inputs& in, bool second) {
  Members out;
  const auto t13_1 = in.th(0, c13_1), t1_13 = in.th(0, c1_13), t13_13 = in.th(0, c13_13), t13_53 = in.th(0, c13_53);
  for (const auto& p : sample_points()) {
    const auto z11 = in.th(0, c11, p);
    if (!second) {
      const auto lhs = pow(t13_1, 2) * in.th(0, c1_13, p) * in.th(0, {R(1), R(5, 3)}, p) +
                       sc(pow(t1_13, 2) * in.th(0, c13_1, p) * in.th(0, {R(5, 3), R(1)}, p), zeta(1, 6));
      out.push_back({"z=" + p.to_string(), lhs, t13_13 * t13_53 * pow(z11, 2)});
    } else {
      const auto lhs = pow(t13_53, 2) * in.th(0, c13_13, p) * in.th(0, {R(5, 3), R(5, 3)}, p) -
                       pow(t13_13, 2) * in.th(0, c13_53, p) * in.th(0, {R(5, 3), R(1, 3)}, p);
      out.push_back({"z=" + p.to_string(), lhs, sc(t13_1 * t1_13 * pow(z11, 2), zeta(1, 3))});
    }
  }
  return out;
}

// Log-derivatives of theta[1,1] at z, cleared of theta; c_n = theta^n (log theta)^(n).
Members thm31(const Inputs& in, int which) {
  Members out;
  const auto tp = in.th(1, c11);
  const auto y3 = in.th(3, c11);
  for (const auto& p : sample_points()) {
    std::vector<PiSeries> f;
    for (unsigned j = 0; j <= static_cast<unsigned>(which); ++j) f.push_back(in.th(j, c11, p));
    const auto& t0 = f[0];
    const auto t2z = in.th(0, c11, times(p, 2));
    const std::string label = "z=" + p.to_string();
    if (which == 3) {
      out.push_back({label, log_deriv_cleared(3, f) * t0, pow(tp, 3) * t2z});
      continue;
    }
    // W = 3 tp theta^2 wp(z), wp = Y/3 - (log theta)''.
    const auto w = y3 * pow(t0, 2) - sc(tp * log_deriv_cleared(2, f), Rational(3));
    if (which == 4) {
      const auto c4 = log_deriv_cleared(4, f);
      const auto lhs = sc(pow(tp, 8) * in.th(0, c11, times(p, 3)) * t0, Rational(4));
      const auto rhs = sc(pow(tp, 5) * w * pow(t2z, 2), Rational(4)) - pow(c4, 2) * pow(t0, 2);
      out.push_back({label, lhs, rhs});
    } else {
      out.push_back({label, log_deriv_cleared(5, f) * t0, sc(pow(tp, 2) * t2z * w, Rational(4))});
    }
  }
  return out;
}

// Chazy: y = i pi E2 and d/dtau = 2 pi i q d/dq.
PiSeries d_tau(const PiSeries& f) { return sc(theta_q(f), zeta(1, 4) * R(2), 1); }

IdentityRecord rec(std::string id, std::string desc, std::string anchor, Category cat, int grade,
                   std::function<Members(const Inputs&)> body) {
  return {std::move(id), std::move(desc), std::move(anchor), cat, grade,
          [body = std::move(body)](const BuildEnv& env) { return body(Inputs(env)); }};
}

std::vector<IdentityRecord> build_registry() {
  using C = Category;
  std::vector<IdentityRecord> r;

  // Level-three Ramanujan system: P = a, Q = E2, R = b^3.
  r.push_back(rec("thm11.P", "12 qP' = 3P^3 + PQ - 4R with P=a, Q=E2, R=b^3", "3P^3+PQ-4R", C::ode, 0,
                  [](const Inputs& in) {
                    const auto P = in.a(), Q = in.E(2), Rr = in.b3();
                    return Members{{"P", sc(theta_q(P), R(12)), sc(pow(P, 3), R(3)) + P * Q - sc(Rr, R(4))}};
                  }));
  r.push_back(rec("thm11.Q", "12 qQ' = -9P^4 + 8PR + Q^2", "-9P^4+8PR+Q^2", C::ode, 0, [](const Inputs& in) {
    const auto P = in.a(), Q = in.E(2), Rr = in.b3();
    return Members{{"Q", sc(theta_q(Q), R(12)), sc(pow(P, 4), R(-9)) + sc(P * Rr, R(8)) + Q * Q}};
  }));
  r.push_back(rec("thm11.R", "4 qR' = -P^2 R + QR", "-P^2R+QR", C::ode, 0, [](const Inputs& in) {
    const auto P = in.a(), Q = in.E(2), Rr = in.b3();
    return Members{{"R", sc(theta_q(Rr), R(4)), Q * Rr - pow(P, 2) * Rr}};
  }));

  // Companion system: P = a, Q = E2(q^3), R = c^3.
  r.push_back(rec("thm12.P", "12 qP' = -3P^3 + 3PQ + 4R with Q=E2(q^3), R=c^3", "-3P^3+3PQ+4R", C::ode, 0,
                  [](const Inputs& in) {
                    const auto P = in.a(), Q = in.E(2, 3), Rr = in.c3();
                    return Members{{"P", sc(theta_q(P), R(12)), sc(pow(P, 3), R(-3)) + sc(P * Q, R(3)) + sc(Rr, R(4))}};
                  }));
  r.push_back(rec("thm12.Q", "36 qQ' = -9P^4 + 8PR + 9Q^2", "-9P^4+8PR+9Q^2", C::ode, 0, [](const Inputs& in) {
    const auto P = in.a(), Q = in.E(2, 3), Rr = in.c3();
    return Members{{"Q", sc(theta_q(Q), R(36)), sc(pow(P, 4), R(-9)) + sc(P * Rr, R(8)) + sc(Q * Q, R(9))}};
  }));
  r.push_back(rec("thm12.R", "4 qR' = P^2 R + 3QR", "P^2R+3QR", C::ode, 0, [](const Inputs& in) {
    const auto P = in.a(), Q = in.E(2, 3), Rr = in.c3();
    return Members{{"R", sc(theta_q(Rr), R(4)), pow(P, 2) * Rr + sc(Q * Rr, R(3))}};
  }));

  // Ramanujan's system, from the definitions and with E4, E6 rebuilt from a and b^3.
  auto ramanujan = [](int k) {
    return [k](const Inputs& in) {
      const auto P = in.a(), Rr = in.b3();
      const auto E2 = in.E(2);
      Members out;
      for (int pass = 0; pass < 2; ++pass) {
        const auto E4 = pass == 0 ? in.E(4) : sc(pow(P, 4), R(9)) - sc(P * Rr, R(8));
        const auto E6 = pass == 0 ? in.E(6)
                                  : sc(pow(P, 6), R(-27)) + sc(pow(P, 3) * Rr, R(36)) - sc(Rr * Rr, R(8));
        const std::string label = pass == 0 ? "definitions" : "via-PQR";
        if (k == 2) out.push_back({label, sc(theta_q(E2), R(12)), E2 * E2 - E4});
        if (k == 4) out.push_back({label, sc(theta_q(E4), R(3)), E2 * E4 - E6});
        if (k == 6) out.push_back({label, sc(theta_q(E6), R(2)), E2 * E6 - E4 * E4});
      }
      return out;
    };
  };
  r.push_back(rec("ramanujan.E2", "12 qE2' = E2^2 - E4", "Ramanujan ODEs: (E_2)^2-E_4", C::ode, 0, ramanujan(2)));
  r.push_back(rec("ramanujan.E4", "3 qE4' = E2 E4 - E6", "Ramanujan ODEs: E_2E_4-E_6", C::ode, 0, ramanujan(4)));
  r.push_back(rec("ramanujan.E6", "2 qE6' = E2 E6 - E4^2", "Ramanujan ODEs: E_2E_6-(E_4)^2", C::ode, 0, ramanujan(6)));

  r.push_back(rec("chazy", "y''' = 2yy'' - 3y'^2 for y = i pi E2", "Chazy: 2yy''-3(y')^2", C::ode, 4, [](const Inputs& in) {
    const auto y = sc(in.E(2), zeta(1, 4), 1);
    const auto y1 = d_tau(y), y2 = d_tau(y1), y3 = d_tau(y2);
    return Members{{"chazy", y3, sc(y * y2, R(2)) - sc(y1 * y1, R(3))}};
  }));

  // Huber's systems.
  r.push_back(rec("huber1.a", "3 qa' = a Pscript - b^3", "Huber: (aP-b^3)/3", C::ode, 0, [](const Inputs& in) {
    const auto a = in.a(), P = in.env.use("huberP", huber_P_script(in.order, k1)), b3 = in.b3();
    return Members{{"a", sc(theta_q(a), R(3)), a * P - b3}};
  }));
  r.push_back(rec("huber1.P", "3 qPscript' = Pscript^2 - a b^3", "Huber: (P^2-ab^3)/3", C::ode, 0, [](const Inputs& in) {
    const auto a = in.a(), P = in.env.use("huberP", huber_P_script(in.order, k1)), b3 = in.b3();
    return Members{{"P", sc(theta_q(P), R(3)), P * P - a * b3}};
  }));
  r.push_back(rec("huber1.b3", "q(b^3)' = Pscript b^3 - a^2 b^3", "Huber: Pb^3-a^2b^3", C::ode, 0, [](const Inputs& in) {
    const auto a = in.a(), P = in.env.use("huberP", huber_P_script(in.order, k1)), b3 = in.b3();
    return Members{{"b3", theta_q(b3), P * b3 - pow(a, 2) * b3}};
  }));
  r.push_back(rec("huber2.a", "3 qa' = c^3 - a Pcal", "Huber: (c^3-aP)/3", C::ode, 0, [](const Inputs& in) {
    const auto a = in.a(), P = in.env.use("huberPcal", huber_P_cal(in.order, k1)), c3 = in.c3();
    return Members{{"a", sc(theta_q(a), R(3)), c3 - a * P}};
  }));
  r.push_back(rec("huber2.P", "3 qPcal' = a c^3 - Pcal^2", "Huber: (ac^3-P^2)/3", C::ode, 0, [](const Inputs& in) {
    const auto a = in.a(), P = in.env.use("huberPcal", huber_P_cal(in.order, k1)), c3 = in.c3();
    return Members{{"P", sc(theta_q(P), R(3)), a * c3 - P * P}};
  }));
  r.push_back(rec("huber2.c3", "q(c^3)' = c^3 a^2 - Pcal c^3", "Huber: c^3a^2-Pc^3", C::ode, 0, [](const Inputs& in) {
    const auto a = in.a(), P = in.env.use("huberPcal", huber_P_cal(in.order, k1)), c3 = in.c3();
    return Members{{"c3", theta_q(c3), c3 * pow(a, 2) - P * c3}};
  }));

  // Series forms of a, b^3, c^3.
  r.push_back(rec("b3.forms", "eta^9(tau)/eta^3(3tau) equals its divisor series", "eta^9(tau)/eta^3(3tau)",
                  C::qseries, 0, [](const Inputs& in) { return Members{{"b3", in.b3(), in.b3_div()}}; }));
  r.push_back(rec("c3.forms", "27 eta^9(3tau)/eta^3(tau) equals its divisor series", "c^3 product form",
                  C::qseries, 0, [](const Inputs& in) { return Members{{"c3", in.c3(), in.c3_div()}}; }));
  r.push_back(rec("a.forms", "lattice sum of a(q) equals 1 + 6 sum (d13 - d23) q^n", "1+6 sum(d_{1,3}-d_{2,3})",
                  C::qseries, 0, [](const Inputs& in) { return Members{{"a", in.a(), in.a_div()}}; }));
  r.push_back(rec("ramanujan-cubic", "a^3 = b^3 + c^3", "a^3=b^3+c^3", C::qseries, 0, [](const Inputs& in) {
    return Members{{"a^3", pow(in.a(), 3), in.b3() + in.c3()}};
  }));

  // Jacobi.
  r.push_back(rec("jacobi.deriv", "theta'[1,1] = -pi theta[0,0] theta[1,0] theta[0,1]", "Jacobi derivative formula",
                  C::theta_const, 1, [](const Inputs& in) {
                    const auto rhs = in.th(0, {R(0), R(0)}) * in.th(0, {R(1), R(0)}) * in.th(0, {R(0), R(1)});
                    return Members{{"jacobi", in.th(1, c11), sc(rhs, R(-1), 1)}};
                  }));
  r.push_back(rec("jacobi.etacube", "theta'[1,1] = -2 pi eta^3", "-2 pi q^(1/8) prod (1-q^n)^3", C::theta_const, 1,
                  [](const Inputs& in) {
                    return Members{{"etacube", in.th(1, c11), sc(pow(in.eta(R(1), in.order), 3), R(-2), 1)}};
                  }));

  r.push_back(rec("heat.family", "theta^(j+2) = -8 pi^2 q d/dq theta^(j) on the registry characteristics",
                  "heat equation", C::theta_const, 2, [](const Inputs& in) {
                    Members out;
                    for (const auto& ch : registry_chars())
                      for (unsigned j = 0; j <= 3; ++j)
                        out.push_back({ch.to_string() + " j=" + std::to_string(j), in.th(j + 2, ch),
                                       sc(theta_q(in.th(j, ch)), R(-8), 2), static_cast<int>(j) + 2});
                    return out;
                  }));
  r.push_back(rec("triple.family", "Jacobi triple product equals the defining sum", "Jacobi triple product",
                  C::theta_const, 0, [](const Inputs& in) {
                    Members out;
                    for (const auto& ch : registry_chars())
                      out.push_back({ch.to_string(), in.env.use("theta", theta_triple_product(ch, in.order, k1)),
                                     in.th(0, ch)});
                    return out;
                  }));

  // theta'/theta at the two level-three characteristics.
  r.push_back(rec("prop41.a", "theta'[1,1/3] = -(pi/sqrt3) a theta[1,1/3]", "-(pi/sqrt3) a(tau)",
                  C::theta_const, 1, [](const Inputs& in) {
                    return Members{{"a", in.th(1, c1_13), sc(in.a() * in.th(0, c1_13), -sqrt3() * R(1, 3), 1)}};
                  }));
  r.push_back(rec("prop41.b", "theta'[1/3,1] = (pi i/3) a(tau/3) theta[1/3,1]", "(pi i/3) a(tau/3)",
                  C::theta_const, 1, [](const Inputs& in) {
                    const auto a3 = substitute_power(in.a(3 * in.order), R(1, 3));
                    return Members{{"b", in.th(1, c13_1), sc(a3 * in.th(0, c13_1), zeta(1, 4) * R(1, 3), 1)}};
                  }));

  // Residue relation, times theta^2 theta'[1,1].
  for (const auto& [tag, ch] : std::vector<std::pair<std::string, ThetaChar>>{
           {"11/3", c1_13}, {"1/31", c13_1}, {"1/31/3", c13_13}, {"1/35/3", c13_53}}) {
    r.push_back(rec("prop42." + tag, "3 theta''/theta - theta'''[1,1]/theta'[1,1] + 6 (theta'/theta)^2 = 0 at " +
                                         ch.to_string(),
                    "3 theta''/theta - Y + 6 X^2 = 0", C::theta_const, 3, [ch = ch](const Inputs& in) {
                      const auto t0 = in.th(0, ch), t1 = in.th(1, ch), t2 = in.th(2, ch);
                      const auto tp = in.th(1, c11), y3 = in.th(3, c11);
                      return Members{
                          {"residue", y3 * t0 * t0, sc(t2 * t0 * tp, R(3)) + sc(t1 * t1 * tp, R(6))}};
                    }));
  }
  r.push_back(rec("prop43", "theta'''[1,1] = -pi^2 E2 theta'[1,1] = -8 pi^2 q d/dq theta'[1,1]",
                  "-pi^2 E_2(q)", C::theta_const, 3, [](const Inputs& in) {
                    const auto tp = in.th(1, c11), y3 = in.th(3, c11);
                    return Members{{"outer", y3, sc(in.E(2) * tp, R(-1), 2)},
                                   {"middle", y3, sc(theta_q(tp), R(-8), 2)}};
                  }));

  // X, Y, Z expansions at [1,1/3] (s = 1) and [1/3,1] (s = -1).
  for (const auto& [sec, ch, s] : std::vector<std::tuple<std::string, ThetaChar, int>>{{"sec5", c1_13, 1}, {"sec6", c13_1, -1}}) {
    for (int k = 2; k <= 5; ++k)
      r.push_back(rec(sec + ".theta" + std::to_string(k), "theta^(" + std::to_string(k) + ")/theta in X, Y, Z at " + ch.to_string(),
                      "X, Y, Z relations", C::theta_const, k,
                      [ch = ch, s = s, k](const Inputs& in) { return xyz_derivative(in, ch, s, k); }));
  }
  r.push_back(rec("g2.rel", "108X^4 - 12XZ = (4/3) pi^4 E4", "g_2=108X^4-12XZ", C::eisenstein, 4, [](const Inputs& in) {
    const auto rhs = sc(in.E(4), R(4, 3), 4);
    return Members{weierstrass_member(in, "sec5", c1_13, 1, g2_poly, rhs),
                   weierstrass_member(in, "sec6", c13_1, -1, g2_poly, rhs)};
  }));
  r.push_back(rec("g3.rel", "-216X^6 + 36X^3 Z - Z^2 = (8/27) pi^6 E6", "g_3=-216X^6+36X^3Z-Z^2", C::eisenstein, 6,
                  [](const Inputs& in) {
                    const auto rhs = sc(in.E(6), R(8, 27), 6);
                    return Members{weierstrass_member(in, "sec5", c1_13, 1, g3_poly, rhs),
                                   weierstrass_member(in, "sec6", c13_1, -1, g3_poly, rhs)};
                  }));

  r.push_back(rec("thm51.E4", "E4 = 9a^4 - 8ab^3", "E_4(q)=9a^4(q)-8a(q)b^3(q)", C::eisenstein, 0, [](const Inputs& in) {
    const auto a = in.a(), b3 = in.b3();
    return Members{{"E4", in.E(4), sc(pow(a, 4), R(9)) - sc(a * b3, R(8))}};
  }));
  r.push_back(rec("thm51.E6", "E6 = -27a^6 + 36a^3b^3 - 8b^6", "-27a^6(q)+36a^3(q)b^3(q)-8b^6(q)", C::eisenstein, 0, [](const Inputs& in) {
    const auto a = in.a(), b3 = in.b3();
    return Members{{"E6", in.E(6), sc(pow(a, 6), R(-27)) + sc(pow(a, 3) * b3, R(36)) - sc(b3 * b3, R(8))}};
  }));
  r.push_back(rec("thm52.J", "J through E4, E6 and through a, b^3, c^3 (cross-multiplied)",
                  "27a^3(9a^3-8b^3)^3 / (b^9(a^3-b^3))", C::eisenstein, 0, [](const Inputs& in) {
                    const auto J = in.env.use("J", j_invariant(in.order, k1));
                    const auto E4c = pow(in.E(4), 3), E6s = pow(in.E(6), 2);
                    const auto a = in.a(), b3 = in.b3(), c3 = in.c3();
                    const auto a3 = pow(a, 3);
                    return Members{
                        {"E4E6", J * (E4c - E6s), sc(E4c, R(1728))},
                        {"b3", J * pow(b3, 3) * (a3 - b3), sc(a3 * pow(sc(a3, R(9)) - sc(b3, R(8)), 3), R(27))},
                        {"c3", J * pow(b3, 3) * c3, sc(a3 * pow(a3 + sc(c3, R(8)), 3), R(27))}};
                  }));
  r.push_back(rec("thm61.E4", "E4(q^3) = a^4 - (8/9) a c^3", "a^4(q)-(8/9)a(q)c^3(q)", C::eisenstein, 0,
                  [](const Inputs& in) {
                    const auto a = in.a(), c3 = in.c3();
                    return Members{{"E4(q^3)", in.E(4, 3), pow(a, 4) - sc(a * c3, R(8, 9))}};
                  }));
  r.push_back(rec("thm61.E6", "E6(q^3) = a^6 - (4/3) a^3 c^3 + (8/27) c^6", "a^6(q)-(4/3)a^3(q)c^3(q)+(8/27)c^6(q)", C::eisenstein, 0,
                  [](const Inputs& in) {
                    const auto a = in.a(), c3 = in.c3();
                    return Members{
                        {"E6(q^3)", in.E(6, 3), pow(a, 6) - sc(pow(a, 3) * c3, R(4, 3)) + sc(c3 * c3, R(8, 27))}};
                  }));
  r.push_back(rec("thm63.J3", "J(q^3) through a, b^3, c^3 (cross-multiplied)", "27a^3(a^3+8b^3)^3", C::eisenstein, 0,
                  [](const Inputs& in) {
                    const Rational o = in.order / 3 + 1;
                    const auto J3 = substitute_power(in.env.use("J", j_invariant(o, k1)), R(3)).truncated(in.order);
                    const auto a = in.a(), b3 = in.b3(), c3 = in.c3();
                    const auto a3 = pow(a, 3);
                    return Members{
                        {"c3", J3 * pow(c3, 3) * (a3 - c3), sc(a3 * pow(sc(a3, R(9)) - sc(c3, R(8)), 3), R(27))},
                        {"b3", J3 * b3 * pow(c3, 3), sc(a3 * pow(a3 + sc(b3, R(8)), 3), R(27))}};
                  }));

  // Level-three q-series and divisor sums.
  r.push_back(rec("thm71", "d/dtau log(eta(3tau)/eta(tau)) + X^2/(2 pi i) = 0, X at [1,1/3]",
                  "log eta(3tau)/eta(tau)", C::ode, 2, [](const Inputs& in) {
                    const EtaQuotientSpec spec{R(1), R(0), {{R(3), 1}, {R(1), -1}}};
                    const auto E = in.eq(spec);
                    const auto t0 = in.th(0, c1_13), t1 = in.th(1, c1_13);
                    return Members{{"thm71", sc(theta_q(E) * t0 * t0, R(4), 2), t1 * t1 * E}};
                  }));
  for (int k = 2; k <= 6; ++k) {
    static const char* anchors[] = {"", "", "1+12 sum(sigma_1(n)-3sigma_1(n/3))q^n", "b^3(q)+c^3(q)",
                                    "24 sum(sigma_3(n)+9sigma_3(n/3))q^n", "sum_{d|n} d^4", "252/13"};
    r.push_back(rec("thm7" + std::to_string(k) + ".a" + std::to_string(k),
                    "a^" + std::to_string(k) + " equals its divisor-sum closed form", anchors[k], C::qseries, 0,
                    [k](const Inputs& in) {
                      return Members{{"a^" + std::to_string(k), pow(in.a(), static_cast<unsigned>(k)),
                                      in.env.use("apow", a_power_closed_form(k, in.order, k1))}};
                    }));
  }
  r.push_back(rec("a2b3.rel", "a^2 b^3 = 1 + 3 sum q^n sum d^4 (d/3)", "a^2b^3 series", C::qseries, 0,
                  [](const Inputs& in) {
                    return Members{{"a2b3", pow(in.a(), 2) * in.b3(), a_sq_b3_series(in.order, k1)}};
                  }));
  r.push_back(rec("a2c3.rel", "a^2 c^3 = 27 sum q^n sum d^4 ((n/d)/3)", "a^2c^3 series", C::qseries, 0,
                  [](const Inputs& in) {
                    return Members{{"a2c3", pow(in.a(), 2) * in.c3(), a_sq_c3_series(in.order, k1)}};
                  }));
  r.push_back(rec("remark2.serre", "12 qa' - E2 a = 3a^3 - 4b^3", "3a^3(q)-4b^3(q)", C::ode, 0,
                  [](const Inputs& in) {
                    const auto a = in.a();
                    return Members{{"serre", sc(theta_q(a), R(12)) - in.E(2) * a, sc(pow(a, 3), R(3)) - sc(in.b3(), R(4))}};
                  }));

  // Cubic theta constants.
  r.push_back(rec("thm81.cubic1", "theta^3[1/3,1/3] + theta^3[1/3,5/3] = theta^3[1/3,1]", "Farkas and Kra's cubic identity",
                  C::theta_const, 0, [](const Inputs& in) {
                    return Members{{"cubic1", pow(in.th(0, c13_13), 3) + pow(in.th(0, c13_53), 3), pow(in.th(0, c13_1), 3)}};
                  }));
  r.push_back(rec("thm81.cubic2", "e^(pi i/3) theta^3[1/3,1/3] + e^(2 pi i/3) theta^3[1/3,5/3] = theta^3[1,1/3]",
                  "Farkas and Kra's cubic identity", C::theta_const, 0, [](const Inputs& in) {
                    const auto lhs = sc(pow(in.th(0, c13_13), 3), zeta(1, 6)) + sc(pow(in.th(0, c13_53), 3), zeta(1, 3));
                    return Members{{"cubic2", lhs, pow(in.th(0, c1_13), 3)}};
                  }));
  r.push_back(rec("farkas.id", "the three expressions of the Farkas identity agree pairwise", "2 pi i q^(1/12)",
                  C::theta_const, 1, [](const Inputs& in) {
                    const auto twoi = zeta(1, 4) * R(2);
                    const auto kappa = zeta(1, 12) * sqrt3() * R(1, 3);
                    const auto P = farkas_product(in);
                    const auto den = farkas_denominator(in);
                    const auto tprime = in.th(1, c1_13), t = in.th(0, c1_13);
                    const auto t3 = theta_at_3tau(in);
                    const auto q12 = PiSeries::monomial(Rational(1), R(1, 12), k1);
                    return Members{{"F1=F2", sc(tprime * P, R(6)), sc(q12 * den, twoi, 1)},
                                   {"F2=F3", sc(q12 * t3, twoi, 1), sc(t * P, twoi * kappa, 1)},
                                   {"F1=F3", sc(tprime * t3, R(6)), sc(t * den, twoi * kappa, 1)}};
                  }));
  r.push_back(rec("thm82.ramanujan", "a(q) eta(tau) = eta^3(tau/3) + 3 eta^3(3tau)", "eta^3(tau/3) + 3 eta^3(3tau)",
                  C::qseries, 0, [](const Inputs& in) {
                    const auto e1 = in.eta(R(1), in.order);
                    const auto e_third = substitute_power(in.eta(R(1), 3 * in.order), R(1, 3));
                    return Members{{"ramanujan", in.a() * e1, pow(e_third, 3) + sc(pow(in.eta(R(3), in.order), 3), R(3))}};
                  }));

  // Two-variable and log-derivative identities at sampled points.
  r.push_back(rec("prop91.id1", "two-variable identity with theta[1,1/3](z) theta[1,5/3](z), sampled",
                  "x_1, x_2, and x_3 not all zero", C::sampled_point, 0,
                  [](const Inputs& in) { return prop91(in, false); }));
  r.push_back(rec("prop91.id2", "two-variable identity with theta[1/3,1/3](z) theta[5/3,5/3](z), sampled",
                  "x_1, x_2, and x_3 not all zero (minus sign)", C::sampled_point, 0, [](const Inputs& in) { return prop91(in, true); }));
  r.push_back(rec("thm91.eta10", "eta^10(3tau)/(eta^3(tau) eta^3(9tau)) = 1 + 3 sum (sigma_1(n) - 9 sigma_1(n/9)) q^n",
                  "eta^10(3tau)/(eta^3(tau)eta^3(9tau))", C::qseries, 0, [](const Inputs& in) {
                    const EtaQuotientSpec s{R(1), R(0), {{R(3), 10}, {R(1), -3}, {R(9), -3}}};
                    return Members{{"eta10", in.eq(s), eta10_series(in.order, k1)}};
                  }));
  r.push_back(rec("thm91.eta339", "eta^3(tau) eta^3(9tau)/eta^2(3tau) = sum (n/3) sigma_1(n) q^n",
                  "sigma_1(3n+1) q^(3n+1)", C::qseries, 0, [](const Inputs& in) {
                    const EtaQuotientSpec s{R(1), R(0), {{R(1), 3}, {R(9), 3}, {R(3), -2}}};
                    return Members{{"eta339", in.eq(s), eta339_series(in.order, k1)}};
                  }));
  r.push_back(rec("thm31.d3", "(log theta[1,1])''' = theta'^3 theta(2z)/theta^4, sampled", "d^3/dz^3 log theta",
                  C::sampled_point, 3, [](const Inputs& in) { return thm31(in, 3); }));
  r.push_back(rec("thm31.d4", "theta'^8 theta(3z)/theta^9 = 3 wp s^2 - (log theta)''''^2/4, sampled",
                  "d^4/dz^4 log theta", C::sampled_point, 8, [](const Inputs& in) { return thm31(in, 4); }));
  r.push_back(rec("thm31.d5", "(log theta[1,1])^(5) = 12 wp theta'^3 theta(2z)/theta^4, sampled", "d^5/dz^5 log theta",
                  C::sampled_point, 5, [](const Inputs& in) { return thm31(in, 5); }));
  return r;
}

}  // namespace

const std::vector<IdentityRecord>& registry() {
  static const std::vector<IdentityRecord> reg = build_registry();
  return reg;
}

}  // namespace cubictheta
