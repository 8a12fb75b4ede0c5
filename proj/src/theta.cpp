#include "cubictheta/theta.hpp"

#include <algorithm>
#include <cmath>

#include "cubictheta/errors.hpp"

namespace cubictheta {

std::string ThetaChar::to_string() const {
  return "[" + cubictheta::to_string(eps) + "," + cubictheta::to_string(eps_prime) + "]";
}

std::string RationalPoint::to_string() const {
  return "(" + cubictheta::to_string(r) + "," + cubictheta::to_string(s) + ")";
}

namespace {

std::int64_t den64(const Rational& r) { return to_int64(r.get_den()); }

// zeta_N^(N * x) for a rational x with den(x) | N.
CycloNumber phase(const Rational& x, const CycloContext::Ptr& ctx) {
  const Rational k = x * ctx->order();
  return CycloNumber::root_of_unity(to_int64(floor_div(k)), ctx);
}

}  // namespace

PiSeries theta_at_point(unsigned j, const ThetaChar& ch, const RationalPoint& p, const Rational& order,
                        SeriesContext ctx) {
  const Rational half_eps = ch.eps / 2;
  const Rational shift = p.r + ch.eps_prime / 2;
  const auto dm = den64(half_eps);
  // m = n + eps/2 has denominator dm; the phase m * shift needs dm * den(shift).
  ctx.cyclo_order = checked_lcm(ctx.cyclo_order, checked_mul(dm, den64(shift)));
  if (j % 2 == 1) ctx.cyclo_order = checked_lcm(ctx.cyclo_order, 4);
  ctx.exponent_denominator = checked_lcm(ctx.exponent_denominator, checked_lcm(2 * dm * dm, dm * den64(p.s)));
  if (ctx.cyclo_order > cyclo_order_cap())
    throw ContextMismatch("theta at " + p.to_string() + " needs Q(zeta_" + std::to_string(ctx.cyclo_order) + ")");
  const auto cyc = CycloContext::get(ctx.cyclo_order);
  const auto d = ctx.exponent_denominator;
  const auto trunc = to_int64(ceil_div(order * d));

  // Exponent m^2/2 + m s = ((m + s)^2 - s^2) / 2 < order  <=>  |m + s| < sqrt(2 order + s^2).
  std::vector<PiSeries::Term> terms;
  const Rational radius_sq = 2 * order + p.s * p.s;
  if (sgn(radius_sq) > 0) {
    const double radius = std::sqrt(radius_sq.get_d());
    const double centre = -p.s.get_d() - half_eps.get_d();
    const auto lo = static_cast<std::int64_t>(std::floor(centre - radius)) - 1;
    const auto hi = static_cast<std::int64_t>(std::ceil(centre + radius)) + 1;
    // i^j: odd j needs zeta_4, which the context holds; even j is a sign.
    const CycloNumber i_odd = CycloNumber::root_of_unity(j % 2 == 1 ? ctx.cyclo_order / 4 : 0, cyc);
    const long sign = (j % 4 == 2 || j % 4 == 3) ? -1 : 1;
    for (std::int64_t n = lo; n <= hi; ++n) {
      const Rational m = half_eps + n;
      const Rational e = m * m / 2 + m * p.s;
      if (e >= order) continue;
      Rational scalar = sign;
      for (unsigned k = 0; k < j; ++k) scalar *= 2 * m;
      if (sgn(scalar) == 0) continue;
      CycloNumber c = phase(m * shift, cyc) * scalar;
      if (j % 2 == 1) c = c * i_odd;
      const Rational en = e * d;
      terms.push_back({to_int64(en.get_num()), std::move(c)});
    }
  }
  return PiSeries(ctx, static_cast<int>(j), std::move(terms), trunc);
}

PiSeries theta_deriv(unsigned j, const ThetaChar& ch, const Rational& order, SeriesContext ctx) {
  return theta_at_point(j, ch, {Rational(0), Rational(0)}, order, ctx);
}

PiSeries theta_triple_product(const ThetaChar& ch, const Rational& order, SeriesContext ctx) {
  // exp(pi i eps eps'/2) x^(eps^2/4) prod (1 - x^(2n)) (1 + e^(pi i eps') x^(2n-1+eps)) (1 + e^(-pi i eps') x^(2n-1-eps)),
  // with x = q^(1/2).
  ctx.cyclo_order = checked_lcm(ctx.cyclo_order, checked_lcm(4 * den64(ch.eps * ch.eps_prime), 2 * den64(ch.eps_prime)));
  const auto cyc = CycloContext::get(ctx.cyclo_order);
  const Rational lead = ch.eps * ch.eps / 8;
  // Factors with negative exponents (|eps| > 1) pull the product down; work
  // deeper by their total so the result is still known below `order`.
  Rational deficit = 0;
  for (long n = 1; Rational(2 * n - 1) < abs(ch.eps); ++n) {
    deficit -= std::min<Rational>(0, Rational(2 * n - 1 + ch.eps) / 2);
    deficit -= std::min<Rational>(0, Rational(2 * n - 1 - ch.eps) / 2);
  }
  const Rational bound = order - lead + deficit;
  const CycloNumber up = phase(ch.eps_prime / 2, cyc);
  const CycloNumber down = phase(-ch.eps_prime / 2, cyc);
  const CycloNumber one(cyc, 1L);

  auto binomial = [&](const CycloNumber& c, const Rational& e) {
    return add(PiSeries::constant(one, ctx), PiSeries::monomial(c, e, ctx));
  };
  PiSeries body = PiSeries::constant(one, ctx).truncated(bound);
  for (long n = 1;; ++n) {
    const Rational e_plain(n);
    const Rational e_up = Rational(2 * n - 1 + ch.eps) / 2;
    const Rational e_down = Rational(2 * n - 1 - ch.eps) / 2;
    if (e_plain >= bound && e_up >= bound && e_down >= bound && sgn(e_down) > 0) break;
    body = mul(body, binomial(-one, e_plain));
    body = mul(body, binomial(up, e_up));
    body = mul(body, binomial(down, e_down));
  }
  return mul(PiSeries::monomial(phase(ch.eps * ch.eps_prime / 4, cyc), lead, ctx), body);
}

PiSeries log_deriv(int n, const ThetaChar& ch, const RationalPoint& p, const Rational& order, SeriesContext ctx) {
  if (n < 1 || n > 5) throw Error("log-derivative order must lie in 1..5");
  std::vector<PiSeries> t;
  const auto base = theta_at_point(0, ch, p, order, ctx);
  if (base.is_zero())
    throw PointIsZero("theta" + ch.to_string() + " vanishes at " + p.to_string() + " below the truncation bound");
  const auto inv = invert(base);
  t.push_back(PiSeries::constant(Rational(1), base.context()));
  for (int k = 1; k <= n; ++k) t.push_back(mul(theta_at_point(static_cast<unsigned>(k), ch, p, order, ctx), inv));
  return log_deriv_from_ratios(n, t);
}

}  // namespace cubictheta
