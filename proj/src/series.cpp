#include "cubictheta/series.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>

#include "cubictheta/errors.hpp"

namespace cubictheta {

namespace {

std::atomic<std::int64_t> g_cyclo_cap{2520};

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= PiSeries::kExact || b >= PiSeries::kExact) return PiSeries::kExact;
  return checked_add(a, b);
}

std::int64_t floor_div_int(std::int64_t a, std::int64_t b) {
  auto q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div_int(std::int64_t a, std::int64_t b) { return -floor_div_int(-a, b); }

}  // namespace

std::int64_t cyclo_order_cap() { return g_cyclo_cap.load(); }

void set_cyclo_order_cap(std::int64_t cap) {
  if (cap < 1) throw Error("cyclotomic order cap must be positive");
  g_cyclo_cap.store(cap);
}

SeriesContext unify(const SeriesContext& a, const SeriesContext& b) {
  SeriesContext out{checked_lcm(a.exponent_denominator, b.exponent_denominator), checked_lcm(a.cyclo_order, b.cyclo_order)};
  if (out.cyclo_order > cyclo_order_cap())
    throw ContextMismatch("unified cyclotomic order " + std::to_string(out.cyclo_order) + " exceeds cap " +
                          std::to_string(cyclo_order_cap()));
  return out;
}

// ---------------------------------------------------------------------------

PiSeries::PiSeries() = default;

PiSeries::PiSeries(SeriesContext ctx, int pi_grade, std::vector<Term> terms, std::int64_t trunc)
    : ctx_(ctx), grade_(pi_grade), trunc_(std::min(trunc, kExact)) {
  if (ctx_.exponent_denominator < 1 || ctx_.cyclo_order < 1) throw Error("series context entries must be positive");
  const auto n = ctx_.cyclo_order;
  for (auto& t : terms) {
    if (t.coeff.order() != n) {
      if (n % t.coeff.order() != 0)
        throw ContextMismatch("coefficient in Q(zeta_" + std::to_string(t.coeff.order()) + ") outside Q(zeta_" +
                              std::to_string(n) + ")");
      t.coeff = t.coeff.lift(n);
    }
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (t.exponent >= trunc_) break;
    if (!terms_.empty() && terms_.back().exponent == t.exponent) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
      continue;
    }
    if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
  }
}

PiSeries PiSeries::zero(SeriesContext ctx, int pi_grade, std::int64_t trunc) { return PiSeries(ctx, pi_grade, {}, trunc); }

PiSeries PiSeries::constant(const CycloNumber& c, SeriesContext ctx, int pi_grade) {
  ctx.cyclo_order = checked_lcm(ctx.cyclo_order, c.order());
  return PiSeries(ctx, pi_grade, {{0, c}}, kExact);
}

PiSeries PiSeries::constant(const Rational& c, SeriesContext ctx, int pi_grade) {
  return constant(CycloNumber(CycloContext::get(ctx.cyclo_order), c), ctx, pi_grade);
}

PiSeries PiSeries::monomial(const CycloNumber& c, const RationalExp& e, SeriesContext ctx, int pi_grade) {
  ctx.exponent_denominator = checked_lcm(ctx.exponent_denominator, to_int64(e.get_den()));
  ctx.cyclo_order = checked_lcm(ctx.cyclo_order, c.order());
  const Rational scaled = e * ctx.exponent_denominator;
  return PiSeries(ctx, pi_grade, {{to_int64(scaled.get_num()), c}}, kExact);
}

PiSeries PiSeries::monomial(const Rational& c, const RationalExp& e, SeriesContext ctx, int pi_grade) {
  return monomial(CycloNumber(CycloContext::get(ctx.cyclo_order), c), e, ctx, pi_grade);
}

std::optional<RationalExp> PiSeries::trunc_exponent() const {
  if (is_exact()) return std::nullopt;
  return make_rational(trunc_, ctx_.exponent_denominator);
}

std::optional<RationalExp> PiSeries::lead_exponent() const {
  if (terms_.empty()) return trunc_exponent();
  return make_rational(terms_.front().exponent, ctx_.exponent_denominator);
}

CycloNumber PiSeries::coefficient(const RationalExp& e) const {
  const Rational scaled = e * ctx_.exponent_denominator;
  if (!is_exact() && scaled >= trunc_)
    throw UnknownCoefficient("coefficient of q^" + to_string(e) + " lies beyond the truncation bound q^" +
                             to_string(*trunc_exponent()));
  const auto zero = CycloNumber(CycloContext::get(ctx_.cyclo_order));
  if (!is_integer(scaled)) return zero;
  const auto k = to_int64(scaled.get_num());
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, std::int64_t x) { return t.exponent < x; });
  if (it == terms_.end() || it->exponent != k) return zero;
  return it->coeff;
}

bool PiSeries::is_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.is_rational(); });
}

PiSeries PiSeries::with_context(const SeriesContext& target) const {
  if (target == ctx_) return *this;
  if (target.exponent_denominator % ctx_.exponent_denominator != 0 || target.cyclo_order % ctx_.cyclo_order != 0)
    throw ContextMismatch("target context does not refine the series context");
  const auto factor = target.exponent_denominator / ctx_.exponent_denominator;
  PiSeries out;
  out.ctx_ = target;
  out.grade_ = grade_;
  out.trunc_ = is_exact() ? kExact : checked_mul(trunc_, factor);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    out.terms_.push_back({checked_mul(t.exponent, factor),
                          t.coeff.order() == target.cyclo_order ? t.coeff : t.coeff.lift(target.cyclo_order)});
  return out;
}

PiSeries PiSeries::truncated(const RationalExp& bound) const {
  // An off-grid bound refines the grid; rounding it up would claim knowledge
  // of exponents a later, finer grid can see.
  if (!is_integer(bound * ctx_.exponent_denominator)) {
    SeriesContext fine = ctx_;
    fine.exponent_denominator = checked_lcm(ctx_.exponent_denominator, to_int64(Rational(bound).get_den()));
    return with_context(fine).truncated(bound);
  }
  const Integer limit = ceil_div(bound * ctx_.exponent_denominator);
  if (!is_exact() && limit >= trunc_) return *this;
  PiSeries out = *this;
  out.trunc_ = to_int64(limit);
  while (!out.terms_.empty() && out.terms_.back().exponent >= out.trunc_) out.terms_.pop_back();
  return out;
}

PiSeries PiSeries::compacted() const {
  std::int64_t g = ctx_.exponent_denominator;
  for (const auto& t : terms_) g = std::gcd(g, t.exponent);
  if (!is_exact()) g = std::gcd(g, trunc_);
  if (g <= 1) return *this;
  PiSeries out = *this;
  out.ctx_.exponent_denominator /= g;
  for (auto& t : out.terms_) t.exponent /= g;
  if (!is_exact()) out.trunc_ /= g;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_grades(const PiSeries& f, const PiSeries& g, const char* op) {
  if (!f.is_zero() && !g.is_zero() && f.pi_grade() != g.pi_grade())
    throw PiGradeMismatch(std::string(op) + ": pi grades " + std::to_string(f.pi_grade()) + " and " +
                          std::to_string(g.pi_grade()) + " cannot be combined");
}

std::pair<PiSeries, PiSeries> unified(const PiSeries& f, const PiSeries& g) {
  const auto ctx = unify(f.context(), g.context());
  return {f.with_context(ctx), g.with_context(ctx)};
}

bool all_rational(const PiSeries& f) { return f.is_rational(); }

}  // namespace

PiSeries add(const PiSeries& f0, const PiSeries& g0) {
  check_grades(f0, g0, "add");
  auto [f, g] = unified(f0, g0);
  PiSeries out;
  out.ctx_ = f.ctx_;
  out.grade_ = f.is_zero() ? g.grade_ : f.grade_;
  out.trunc_ = std::min(f.trunc_, g.trunc_);
  auto a = f.terms_.begin(), ae = f.terms_.end();
  auto b = g.terms_.begin(), be = g.terms_.end();
  while (a != ae || b != be) {
    const bool take_a = b == be || (a != ae && a->exponent < b->exponent);
    const bool take_b = a == ae || (b != be && b->exponent < a->exponent);
    const auto e = take_a ? a->exponent : b->exponent;
    if (e >= out.trunc_) break;
    if (take_a) {
      out.terms_.push_back(*a++);
    } else if (take_b) {
      out.terms_.push_back(*b++);
    } else {
      CycloNumber c = a->coeff + b->coeff;
      if (!c.is_zero()) out.terms_.push_back({e, std::move(c)});
      ++a;
      ++b;
    }
  }
  return out;
}

PiSeries neg(const PiSeries& f) { return scale(f, Rational(-1)); }

PiSeries sub(const PiSeries& f, const PiSeries& g) { return add(f, neg(g)); }

PiSeries mul(const PiSeries& f0, const PiSeries& g0) {
  auto [f, g] = unified(f0, g0);
  PiSeries out;
  out.ctx_ = f.ctx_;
  out.grade_ = f.grade_ + g.grade_;
  out.trunc_ = std::min(sat_add(f.trunc_, g.lead()), sat_add(g.trunc_, f.lead()));
  if (f.is_zero() || g.is_zero()) return out;

  const auto base = f.terms_.front().exponent + g.terms_.front().exponent;
  std::int64_t step = 0;
  for (const auto& t : f.terms_) step = std::gcd(step, t.exponent - f.terms_.front().exponent);
  for (const auto& t : g.terms_) step = std::gcd(step, t.exponent - g.terms_.front().exponent);
  if (step == 0) step = 1;
  const auto top = std::min(out.trunc_ - 1, f.terms_.back().exponent + g.terms_.back().exponent);
  if (top < base) return out;
  const auto slots = static_cast<std::size_t>((top - base) / step + 1);
  const auto ctx = CycloContext::get(out.ctx_.cyclo_order);

  if (all_rational(f) && all_rational(g)) {
    std::vector<Rational> acc(slots);
    Rational tmp;
    for (const auto& x : f.terms_) {
      const auto& xv = x.coeff.entries()[0].value;
      for (const auto& y : g.terms_) {
        const auto e = x.exponent + y.exponent;
        if (e >= out.trunc_) break;
        mpq_mul(tmp.get_mpq_t(), xv.get_mpq_t(), y.coeff.entries()[0].value.get_mpq_t());
        acc[static_cast<std::size_t>((e - base) / step)] += tmp;
      }
    }
    for (std::size_t k = 0; k < slots; ++k)
      if (sgn(acc[k]) != 0)
        out.terms_.push_back({base + static_cast<std::int64_t>(k) * step, CycloNumber(ctx, acc[k])});
    return out;
  }

  std::vector<CycloNumber> acc(slots, CycloNumber(ctx));
  for (const auto& x : f.terms_)
    for (const auto& y : g.terms_) {
      const auto e = x.exponent + y.exponent;
      if (e >= out.trunc_) break;
      CycloNumber::add_product(acc[static_cast<std::size_t>((e - base) / step)], x.coeff, y.coeff);
    }
  for (std::size_t k = 0; k < slots; ++k)
    if (!acc[k].is_zero()) out.terms_.push_back({base + static_cast<std::int64_t>(k) * step, std::move(acc[k])});
  return out;
}

PiSeries invert(const PiSeries& f) {
  if (f.is_zero()) throw NotInvertible("series vanishes below its truncation bound");
  const auto e0 = f.terms_.front().exponent;
  const CycloNumber inv_c0 = f.terms_.front().coeff.inverse();
  PiSeries out;
  out.ctx_ = f.ctx_;
  out.grade_ = -f.grade_;
  if (f.terms_.size() == 1) {
    out.trunc_ = f.is_exact() ? PiSeries::kExact : checked_add(f.trunc_, -2 * e0);
    out.terms_.push_back({-e0, inv_c0});
    return out;
  }
  if (f.is_exact())
    throw NotInvertible("exact multi-term series has an infinite inverse; truncate it first");
  out.trunc_ = checked_add(f.trunc_, -2 * e0);

  std::int64_t step = 0;
  for (const auto& t : f.terms_) step = std::gcd(step, t.exponent - e0);
  // Coefficient of q^(-e0 + k step) is known for k step < trunc - e0.
  const auto slots = static_cast<std::size_t>(ceil_div_int(f.trunc_ - e0, step));
  std::vector<std::pair<std::size_t, const CycloNumber*>> tail;
  for (std::size_t i = 1; i < f.terms_.size(); ++i)
    tail.emplace_back(static_cast<std::size_t>((f.terms_[i].exponent - e0) / step), &f.terms_[i].coeff);
  const auto ctx = CycloContext::get(f.ctx_.cyclo_order);

  if (all_rational(f)) {
    const Rational c0inv = inv_c0.rational_part();
    std::vector<Rational> h(slots);
    h[0] = c0inv;
    Rational acc, tmp;
    for (std::size_t k = 1; k < slots; ++k) {
      acc = 0;
      for (auto [j, c] : tail) {
        if (j > k) break;
        if (sgn(h[k - j]) == 0) continue;
        mpq_mul(tmp.get_mpq_t(), c->entries()[0].value.get_mpq_t(), h[k - j].get_mpq_t());
        acc += tmp;
      }
      h[k] = -acc * c0inv;
    }
    for (std::size_t k = 0; k < slots; ++k)
      if (sgn(h[k]) != 0) out.terms_.push_back({-e0 + static_cast<std::int64_t>(k) * step, CycloNumber(ctx, h[k])});
    return out;
  }

  const CycloNumber minus_inv = -inv_c0;
  std::vector<CycloNumber> h(slots, CycloNumber(ctx));
  h[0] = inv_c0;
  for (std::size_t k = 1; k < slots; ++k) {
    CycloNumber acc(ctx);
    for (auto [j, c] : tail) {
      if (j > k) break;
      CycloNumber::add_product(acc, *c, h[k - j]);
    }
    h[k] = acc * minus_inv;
  }
  for (std::size_t k = 0; k < slots; ++k)
    if (!h[k].is_zero()) out.terms_.push_back({-e0 + static_cast<std::int64_t>(k) * step, std::move(h[k])});
  return out;
}

PiSeries pow(const PiSeries& f, unsigned n) {
  PiSeries result = PiSeries::constant(Rational(1), f.context(), 0);
  PiSeries base = f;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1U;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

PiSeries theta_q(const PiSeries& f) {
  std::vector<PiSeries::Term> terms;
  terms.reserve(f.terms().size());
  const auto d = f.denominator();
  for (const auto& t : f.terms()) {
    if (t.exponent == 0) continue;
    terms.push_back({t.exponent, t.coeff * make_rational(t.exponent, d)});
  }
  return PiSeries(f.context(), f.pi_grade(), std::move(terms), f.trunc());
}

PiSeries substitute_power(const PiSeries& f, const Rational& k) {
  if (sgn(k) <= 0) throw Error("substitute_power needs a positive exponent, got " + to_string(k));
  const auto p = to_int64(k.get_num());
  const auto r = to_int64(k.get_den());
  SeriesContext raw = f.context();
  raw.exponent_denominator = checked_mul(raw.exponent_denominator, r);
  std::vector<PiSeries::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) terms.push_back({checked_mul(t.exponent, p), t.coeff});
  const auto trunc = f.is_exact() ? PiSeries::kExact : checked_mul(f.trunc(), p);
  PiSeries out = PiSeries(raw, f.pi_grade(), std::move(terms), trunc).compacted();
  SeriesContext target = out.context();
  target.exponent_denominator = checked_lcm(target.exponent_denominator, f.denominator());
  return out.with_context(target);
}

PiSeries scale(const PiSeries& f, const CycloNumber& c, int dpi) {
  SeriesContext ctx = f.context();
  ctx.cyclo_order = checked_lcm(ctx.cyclo_order, c.order());
  const PiSeries g = f.with_context(ctx);
  const CycloNumber cc = c.order() == ctx.cyclo_order ? c : c.lift(ctx.cyclo_order);
  std::vector<PiSeries::Term> terms;
  terms.reserve(g.terms().size());
  for (const auto& t : g.terms()) terms.push_back({t.exponent, t.coeff * cc});
  return PiSeries(ctx, f.pi_grade() + dpi, std::move(terms), g.trunc());
}

PiSeries scale(const PiSeries& f, const Rational& c, int dpi) {
  std::vector<PiSeries::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) terms.push_back({t.exponent, t.coeff * c});
  return PiSeries(f.context(), f.pi_grade() + dpi, std::move(terms), f.trunc());
}

Comparison equal_to_order(const PiSeries& f0, const PiSeries& g0) {
  check_grades(f0, g0, "equal_to_order");
  auto [f, g] = unified(f0, g0);
  Comparison out;
  const auto bound = std::min(f.trunc(), g.trunc());
  const auto d = f.denominator();
  if (bound < PiSeries::kExact) out.achieved = make_rational(bound, d);
  auto a = f.terms().begin(), ae = f.terms().end();
  auto b = g.terms().begin(), be = g.terms().end();
  const auto zero = CycloNumber(CycloContext::get(f.cyclo_order()));
  while (a != ae || b != be) {
    const bool take_a = b == be || (a != ae && a->exponent < b->exponent);
    const bool take_b = a == ae || (b != be && b->exponent < a->exponent);
    const auto e = take_a ? a->exponent : b->exponent;
    if (e >= bound) break;
    if (take_a || take_b || a->coeff != b->coeff) {
      out.equal = false;
      out.first_discrepancy = Discrepancy{make_rational(e, d), take_b ? zero : a->coeff, take_a ? zero : b->coeff};
      return out;
    }
    ++a;
    ++b;
  }
  return out;
}

}  // namespace cubictheta
