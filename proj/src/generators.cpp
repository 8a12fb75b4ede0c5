#include "cubictheta/generators.hpp"

#include <cmath>
#include <sstream>

#include "cubictheta/arith.hpp"
#include "cubictheta/errors.hpp"

namespace cubictheta {

namespace {

// Number of k >= 0 with start + k step < order.
std::size_t slot_count(const Rational& start, const Rational& step, const Rational& order) {
  if (order <= start) return 0;
  const Integer k = ceil_div((order - start) / step);
  return static_cast<std::size_t>(to_int64(k));
}

std::size_t integer_slots(const Rational& order) { return slot_count(0, 1, order); }

std::int64_t den64(const Rational& r) { return to_int64(r.get_den()); }

PiSeries rational_coeffs(const std::vector<Integer>& c, const Rational& order, SeriesContext ctx) {
  std::vector<Rational> r(c.begin(), c.end());
  return from_dense(r, 0, 1, order, ctx);
}

}  // namespace

PiSeries from_dense(const std::vector<Rational>& c, const Rational& start, const Rational& step, const Rational& order,
                    SeriesContext ctx) {
  ctx.exponent_denominator = checked_lcm(ctx.exponent_denominator, checked_lcm(den64(start), den64(step)));
  const auto d = ctx.exponent_denominator;
  const auto trunc = to_int64(ceil_div(order * d));
  const auto q = CycloContext::get(ctx.cyclo_order);
  std::vector<PiSeries::Term> terms;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    const Rational e = (start + step * static_cast<long>(k)) * d;
    terms.push_back({to_int64(e.get_num()), CycloNumber(q, c[k])});
  }
  return PiSeries(ctx, 0, std::move(terms), trunc);
}

// ---------------------------------------------------------------------------

Rational EtaQuotientSpec::leading_exponent() const {
  Rational e = shift;
  for (const auto& f : factors) e += f.multiplier * f.exponent / 24;
  return e;
}

EtaQuotientSpec EtaQuotientSpec::parse(std::string_view text) {
  EtaQuotientSpec spec;
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("bad eta-quotient spec '" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw fail("empty");
  bool seen_scalar = false, first = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto star = text.find('*', pos);
    const auto tok = text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    pos = star == std::string_view::npos ? text.size() + 1 : star + 1;
    if (tok.empty()) throw fail("empty factor");
    const auto caret = tok.find('^');
    if (tok.front() == 'q') {
      if (caret != 1) throw fail("shift must read q^{p/q}");
      auto e = tok.substr(2);
      if (e.size() >= 2 && e.front() == '{' && e.back() == '}') e = e.substr(1, e.size() - 2);
      spec.shift += parse_rational(e);
    } else if (caret == std::string_view::npos) {
      if (!first || seen_scalar) throw fail("a scalar may only lead the spec");
      spec.scalar = parse_rational(tok);
      seen_scalar = true;
    } else {
      const Rational m = parse_rational(tok.substr(0, caret));
      if (sgn(m) <= 0) throw fail("multipliers must be positive");
      const Rational e = parse_rational(tok.substr(caret + 1));
      if (!is_integer(e)) throw fail("exponents must be integers");
      spec.factors.push_back({m, static_cast<int>(to_int64(e.get_num()))});
    }
    first = false;
  }
  return spec;
}

std::string EtaQuotientSpec::to_string() const {
  std::ostringstream os;
  os << cubictheta::to_string(scalar);
  if (sgn(shift) != 0) os << "*q^{" << cubictheta::to_string(shift) << "}";
  for (const auto& f : factors) os << '*' << cubictheta::to_string(f.multiplier) << '^' << f.exponent;
  return os.str();
}

EtaQuotientSpec b3_spec() { return {Rational(1), Rational(0), {{Rational(1), 9}, {Rational(3), -3}}}; }

EtaQuotientSpec c3_spec() { return {Rational(27), Rational(0), {{Rational(3), 9}, {Rational(1), -3}}}; }

PiSeries q_pochhammer(const Rational& m, const Rational& order, SeriesContext ctx) {
  const auto slots = slot_count(0, m, order);
  std::vector<Integer> c(slots);
  if (slots > 0) c[0] = 1;
  for (std::size_t n = 1; n < slots; ++n)
    for (std::size_t k = slots - 1; k >= n; --k) c[k] -= c[k - n];
  return from_dense(std::vector<Rational>(c.begin(), c.end()), 0, m, order, ctx);
}

PiSeries residue_product(const Rational& r, const Rational& m, const Rational& order, SeriesContext ctx) {
  if (sgn(r) <= 0 || sgn(m) <= 0) throw Error("residue_product needs positive r and m");
  // Work on the grid g = gcd(r, m) so every factor sits at an integer slot.
  const Rational g = Rational(gcd(r.get_num() * m.get_den(), m.get_num() * r.get_den())) / (r.get_den() * m.get_den());
  const auto slots = slot_count(0, g, order);
  std::vector<Integer> c(slots);
  if (slots > 0) c[0] = 1;
  for (Rational e = r; e < order; e += m) {
    const auto s = static_cast<std::size_t>(to_int64(Rational(e / g).get_num()));
    for (std::size_t k = slots - 1; k >= s; --k) c[k] -= c[k - s];
  }
  return from_dense(std::vector<Rational>(c.begin(), c.end()), 0, g, order, ctx);
}

PiSeries eta(const Rational& m, const Rational& order, SeriesContext ctx) {
  if (sgn(m) <= 0) throw Error("eta multiplier must be positive");
  const Rational lead = m / 24;
  return mul(PiSeries::monomial(Rational(1), lead, ctx), q_pochhammer(m, order - lead, ctx));
}

PiSeries eta_quotient(const EtaQuotientSpec& spec, const Rational& order, SeriesContext ctx) {
  const Rational lead = spec.leading_exponent();
  const Rational bound = order - lead;
  if (bound <= 0) {
    auto probe = PiSeries::monomial(Rational(1), lead, ctx);
    const Rational scaled = order * probe.denominator();
    return PiSeries::zero(probe.context(), 0, to_int64(ceil_div(scaled)));
  }
  PiSeries body = PiSeries::constant(Rational(1), ctx);
  for (const auto& f : spec.factors) {
    if (f.exponent == 0) continue;
    auto p = pow(q_pochhammer(f.multiplier, bound, ctx), static_cast<unsigned>(std::abs(f.exponent)));
    body = mul(body, f.exponent > 0 ? p : invert(p));
  }
  return mul(PiSeries::monomial(spec.scalar, lead, ctx), body.truncated(bound));
}

PiSeries eisenstein(int k, std::int64_t m, const Rational& order, SeriesContext ctx) {
  long c = 0;
  switch (k) {
    case 2: c = -24; break;
    case 4: c = 240; break;
    case 6: c = -504; break;
    default: throw Error("eisenstein weight must be 2, 4 or 6");
  }
  if (m < 1) throw Error("eisenstein multiplier must be positive");
  const auto slots = slot_count(0, m, order);
  std::vector<Rational> coeffs(slots);
  if (slots > 0) coeffs[0] = 1;
  for (std::size_t n = 1; n < slots; ++n) coeffs[n] = c * sigma(static_cast<unsigned>(k - 1), static_cast<long>(n));
  return from_dense(coeffs, 0, m, order, ctx);
}

PiSeries a_lattice(const Rational& order, SeriesContext ctx) {
  const auto slots = integer_slots(order);
  std::vector<Integer> c(slots);
  if (slots == 0) return rational_coeffs(c, order, ctx);
  // m^2 + m n + n^2 = ((2m + n)^2 + 3 n^2) / 4 <= K - 1.
  const std::int64_t top = static_cast<std::int64_t>(slots) - 1;
  for (std::int64_t n = 0; 3 * n * n <= 4 * top; ++n) {
    const std::int64_t room = 4 * top - 3 * n * n;
    std::int64_t s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(room)));
    while (s * s > room) --s;
    while ((s + 1) * (s + 1) <= room) ++s;
    for (int sign : {1, -1}) {
      const std::int64_t nn = sign * n;
      if (n == 0 && sign == -1) continue;
      for (std::int64_t u = -s; u <= s; ++u) {
        if (((u - nn) % 2 + 2) % 2 != 0) continue;
        const std::int64_t m = (u - nn) / 2;
        const std::int64_t v = m * m + m * nn + nn * nn;
        if (v <= top) c[static_cast<std::size_t>(v)] += 1;
      }
    }
  }
  return rational_coeffs(c, order, ctx);
}

PiSeries a_divisor(const Rational& order, SeriesContext ctx) {
  const auto slots = integer_slots(order);
  std::vector<Integer> c(slots);
  if (slots > 0) c[0] = 1;
  for (std::size_t n = 1; n < slots; ++n) {
    const Rational x(static_cast<long>(n));
    c[n] = 6 * (d_mod(1, 3, x) - d_mod(2, 3, x));
  }
  return rational_coeffs(c, order, ctx);
}

namespace {

PiSeries twisted_series(long lead, long factor, unsigned k, bool twist_divisor, const Rational& order,
                        SeriesContext ctx) {
  const auto slots = integer_slots(order);
  std::vector<Integer> c(slots);
  if (slots > 0) c[0] = lead;
  for (std::size_t n = 1; n < slots; ++n)
    c[n] = factor * twisted_divisor_sum(k, static_cast<std::int64_t>(n), twist_divisor);
  return rational_coeffs(c, order, ctx);
}

}  // namespace

PiSeries b_cubed_series(const Rational& order, SeriesContext ctx) { return twisted_series(1, -9, 2, true, order, ctx); }

PiSeries c_cubed_series(const Rational& order, SeriesContext ctx) { return twisted_series(0, 27, 2, false, order, ctx); }

PiSeries a_sq_b3_series(const Rational& order, SeriesContext ctx) { return twisted_series(1, 3, 4, true, order, ctx); }

PiSeries a_sq_c3_series(const Rational& order, SeriesContext ctx) { return twisted_series(0, 27, 4, false, order, ctx); }

PiSeries huber_P_script(const Rational& order, SeriesContext ctx) {
  const auto slots = integer_slots(order);
  std::vector<Rational> c(slots);
  if (slots > 0) c[0] = 1;
  for (std::size_t n = 1; n < slots; ++n) {
    // cos(2 n pi / 3) is 1 when 3 | n and -1/2 otherwise.
    const Rational term = n % 3 == 0 ? Rational(-6 * static_cast<long>(n)) : Rational(3 * static_cast<long>(n));
    for (std::size_t k = n; k < slots; k += n) c[k] += term;
  }
  return from_dense(c, 0, 1, order, ctx);
}

PiSeries huber_P_cal(const Rational& order, SeriesContext ctx) {
  const auto slots = integer_slots(order);
  std::vector<Rational> c(slots);
  for (std::size_t n = 1; n < slots; ++n)
    for (std::size_t base = 0; base < slots; base += 3 * n)
      for (std::size_t e : {n, 2 * n})
        if (base + e < slots) c[base + e] += 9 * static_cast<long>(n);
  return from_dense(c, 0, 1, order, ctx);
}

PiSeries a_power_closed_form(int k, const Rational& order, SeriesContext ctx) {
  const auto slots = integer_slots(order);
  std::vector<Rational> c(slots);
  if (slots > 0) c[0] = 1;
  auto third = [](std::size_t n) { return make_rational(static_cast<std::int64_t>(n), 3); };
  switch (k) {
    case 1: return a_divisor(order, ctx);
    case 2:
      for (std::size_t n = 1; n < slots; ++n)
        c[n] = 12 * (sigma(1, static_cast<long>(n)) - 3 * sigma(1, third(n)));
      return from_dense(c, 0, 1, order, ctx);
    case 3: return add(b_cubed_series(order, ctx), c_cubed_series(order, ctx));
    case 4:
      for (std::size_t n = 1; n < slots; ++n)
        c[n] = 24 * (sigma(3, static_cast<long>(n)) + 9 * sigma(3, third(n)));
      return from_dense(c, 0, 1, order, ctx);
    case 5: return add(a_sq_b3_series(order, ctx), a_sq_c3_series(order, ctx));
    case 6: {
      for (std::size_t n = 1; n < slots; ++n)
        c[n] = make_rational(252, 13) * (sigma(5, static_cast<long>(n)) - 27 * sigma(5, third(n)));
      const EtaQuotientSpec spec{make_rational(216, 13), Rational(0), {{Rational(1), 6}, {Rational(3), 6}}};
      return add(from_dense(c, 0, 1, order, ctx), eta_quotient(spec, order, ctx));
    }
    default: throw Error("closed forms exist for a^1 .. a^6 only");
  }
}

PiSeries eta10_series(const Rational& order, SeriesContext ctx) {
  const auto slots = integer_slots(order);
  std::vector<Rational> c(slots);
  if (slots > 0) c[0] = 1;
  for (std::size_t n = 1; n < slots; ++n)
    c[n] = 3 * (sigma(1, static_cast<long>(n)) - 9 * sigma(1, make_rational(static_cast<std::int64_t>(n), 9)));
  return from_dense(c, 0, 1, order, ctx);
}

PiSeries eta339_series(const Rational& order, SeriesContext ctx) {
  const auto slots = integer_slots(order);
  std::vector<Rational> c(slots);
  for (std::size_t n = 1; n < slots; ++n) c[n] = legendre3(static_cast<long>(n)) * sigma(1, static_cast<long>(n));
  return from_dense(c, 0, 1, order, ctx);
}

PiSeries j_invariant(const Rational& order, SeriesContext ctx) {
  // E4^3 - E6^2 = 1728 q + ..., so inversion costs two units of knowledge.
  const Rational work = order + 2;
  const auto e4c = pow(eisenstein(4, 1, work, ctx), 3);
  const auto disc = sub(e4c, pow(eisenstein(6, 1, work, ctx), 2));
  return scale(mul(e4c, invert(disc)), Rational(1728)).truncated(order);
}

}  // namespace cubictheta
