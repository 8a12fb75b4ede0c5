#include "cubictheta/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "cubictheta/errors.hpp"

namespace cubictheta {

namespace {

constexpr std::int64_t kMaxOrder = 1 << 20;

// Exact division of a by a monic b; both ascending.
IntPoly divide_monic(const IntPoly& a, const IntPoly& b) {
  IntPoly rem = a;
  const auto db = b.size() - 1;
  IntPoly quot(a.size() - db, 0);
  for (auto k = a.size(); k-- > db;) {
    const auto c = rem[k];
    if (c == 0) continue;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = checked_add(rem[k - db + j], -checked_mul(c, b[j]));
  }
  for (auto c : rem)
    if (c != 0) throw Error("cyclotomic division left a remainder");
  return quot;
}

}  // namespace

IntPoly cyclotomic_polynomial(std::int64_t n) {
  if (n < 1 || n > kMaxOrder) throw Error("cyclotomic order out of range: " + std::to_string(n));
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycloContext::CycloContext(std::int64_t order) : order_(order) {
  if (order < 1 || order > kMaxOrder) throw Error("cyclotomic order out of range: " + std::to_string(order));
  poly_ = cyclotomic_polynomial(order);
  phi_ = static_cast<int>(poly_.size() - 1);
  for (int j = 0; j < phi_; ++j)
    if (poly_[static_cast<std::size_t>(j)] != 0) tail_.emplace_back(j, poly_[static_cast<std::size_t>(j)]);

  // x^k mod Phi for k in [phi, 2 phi - 2], by repeated multiplication with x.
  const int count = std::max(phi_ - 1, 0);
  high_powers_.reserve(static_cast<std::size_t>(count));
  std::vector<std::int64_t> cur(static_cast<std::size_t>(phi_), 0);
  for (auto [j, p] : tail_) cur[static_cast<std::size_t>(j)] = -p;
  for (int k = 0; k < count; ++k) {
    std::vector<std::pair<int, std::int64_t>> row;
    for (int j = 0; j < phi_; ++j)
      if (cur[static_cast<std::size_t>(j)] != 0) row.emplace_back(j, cur[static_cast<std::size_t>(j)]);
    high_powers_.push_back(std::move(row));
    const auto top = cur.back();
    for (int j = phi_ - 1; j > 0; --j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
    cur[0] = 0;
    if (top != 0)
      for (auto [j, p] : tail_) cur[static_cast<std::size_t>(j)] = checked_add(cur[static_cast<std::size_t>(j)], -checked_mul(top, p));
  }
}

std::vector<std::pair<int, std::int64_t>> CycloContext::power_residue(std::int64_t k) const {
  k %= order_;
  if (k < 0) k += order_;
  if (k < phi_) return {{static_cast<int>(k), 1}};
  if (k <= 2 * static_cast<std::int64_t>(phi_) - 2) return high_power(static_cast<int>(k));
  // Exponents past the table: step up from x^(phi - 1).
  std::vector<std::int64_t> cur(static_cast<std::size_t>(phi_), 0);
  cur.back() = 1;
  for (std::int64_t e = phi_ - 1; e < k; ++e) {
    const auto top = cur.back();
    for (int j = phi_ - 1; j > 0; --j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
    cur[0] = 0;
    if (top != 0)
      for (auto [j, p] : tail_) cur[static_cast<std::size_t>(j)] = checked_add(cur[static_cast<std::size_t>(j)], -checked_mul(top, p));
  }
  std::vector<std::pair<int, std::int64_t>> row;
  for (int j = 0; j < phi_; ++j)
    if (cur[static_cast<std::size_t>(j)] != 0) row.emplace_back(j, cur[static_cast<std::size_t>(j)]);
  return row;
}

CycloContext::Ptr CycloContext::get(std::int64_t order) {
  static std::mutex mutex;
  static std::map<std::int64_t, Ptr> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const CycloContext>(order);
  cache.emplace(order, ctx);
  return ctx;
}

std::int64_t common_order(std::int64_t n, std::int64_t m) {
  if (n == m) return n;
  if (m % n == 0) return m;
  if (n % m == 0) return n;
  throw ContextMismatch("cyclotomic orders " + std::to_string(n) + " and " + std::to_string(m) +
                        " are not nested; lift explicitly");
}

// ---------------------------------------------------------------------------

namespace {

// Product scratch: dense unreduced buffer reused per thread.
struct Scratch {
  std::vector<Rational> buf;
  Rational tmp;

  void prepare(int size) {
    if (static_cast<int>(buf.size()) < size) buf.resize(static_cast<std::size_t>(size));
  }
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

// Reduces buf[0..top] modulo Phi and moves the nonzero residue into out.
void reduce_and_collect(const CycloContext& ctx, Scratch& s, int top, std::vector<CycloNumber::Entry>& out) {
  const int phi = ctx.phi();
  for (int k = top; k >= phi; --k) {
    auto& c = s.buf[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    for (auto [j, p] : ctx.tail()) {
      s.tmp = c * p;
      s.buf[static_cast<std::size_t>(k - phi + j)] -= s.tmp;
    }
    c = 0;
  }
  out.clear();
  for (int k = 0; k < std::min(top + 1, phi); ++k) {
    auto& c = s.buf[static_cast<std::size_t>(k)];
    if (sgn(c) != 0) {
      out.push_back({k, c});
      c = 0;
    }
  }
}

}  // namespace

CycloNumber::CycloNumber() : ctx_(CycloContext::get(1)) {}

CycloNumber::CycloNumber(CycloContext::Ptr ctx) : ctx_(std::move(ctx)) {}

CycloNumber::CycloNumber(CycloContext::Ptr ctx, const Rational& value) : ctx_(std::move(ctx)) {
  if (sgn(value) != 0) {
    entries_.push_back({0, value});
    entries_[0].value.canonicalize();
  }
}

CycloNumber CycloNumber::root_of_unity(std::int64_t k, CycloContext::Ptr ctx) {
  CycloNumber out(ctx);
  for (auto [j, c] : ctx->power_residue(k)) out.entries_.push_back({j, Rational(c)});
  return out;
}

CycloNumber CycloNumber::from_coeffs(CycloContext::Ptr ctx, const std::vector<Rational>& coeffs) {
  CycloNumber out(ctx);
  if (coeffs.empty()) return out;
  auto& s = scratch();
  const int top = static_cast<int>(coeffs.size()) - 1;
  if (top > 2 * ctx->phi() - 2) {
    // Fold through x^N = 1 first so the buffer stays bounded.
    std::vector<Rational> folded(static_cast<std::size_t>(ctx->order()));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      Rational c = coeffs[k];
      c.canonicalize();
      folded[k % folded.size()] += c;
    }
    for (std::size_t k = 0; k < folded.size(); ++k) {
      if (sgn(folded[k]) == 0) continue;
      out += CycloNumber::root_of_unity(static_cast<std::int64_t>(k), ctx) * folded[k];
    }
    return out;
  }
  s.prepare(std::max(top + 1, 2 * ctx->phi()));
  for (int k = 0; k <= top; ++k) {
    auto& c = s.buf[static_cast<std::size_t>(k)];
    c = coeffs[static_cast<std::size_t>(k)];
    c.canonicalize();
  }
  reduce_and_collect(*ctx, s, top, out.entries_);
  return out;
}

CycloNumber CycloNumber::from_entries(CycloContext::Ptr ctx, std::vector<Entry> entries) {
  CycloNumber out(std::move(ctx));
  out.entries_ = std::move(entries);
  return out;
}

std::vector<Rational> CycloNumber::coeffs() const {
  std::vector<Rational> dense(static_cast<std::size_t>(ctx_->phi()));
  for (const auto& e : entries_) dense[static_cast<std::size_t>(e.degree)] = e.value;
  return dense;
}

bool CycloNumber::is_one() const { return entries_.size() == 1 && entries_[0].degree == 0 && entries_[0].value == 1; }

Rational CycloNumber::rational_part() const {
  if (!entries_.empty() && entries_[0].degree == 0) return entries_[0].value;
  return Rational(0);
}

CycloNumber CycloNumber::lift(std::int64_t m) const {
  const auto n = order();
  if (m <= 0 || m % n != 0)
    throw NotAnExtension("Q(zeta_" + std::to_string(n) + ") does not embed in Q(zeta_" + std::to_string(m) + ")");
  if (m == n) return *this;
  auto target = CycloContext::get(m);
  const auto step = m / n;
  auto& s = scratch();
  s.prepare(2 * target->phi());
  int top = 0;
  for (const auto& e : entries_) {
    for (auto [j, c] : target->power_residue(e.degree * step)) {
      s.tmp = e.value * c;
      s.buf[static_cast<std::size_t>(j)] += s.tmp;
      top = std::max(top, j);
    }
  }
  CycloNumber out(target);
  reduce_and_collect(*target, s, top, out.entries_);
  return out;
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// (quotient, remainder) of a / b over Q.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead_inv = 1 / b.back();
  for (auto k = a.size(); k-- >= b.size();) {
    if (sgn(a[k]) == 0) continue;
    Rational c = a[k] * lead_inv;
    q[k - (b.size() - 1)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= c * b[j];
    if (k == b.size() - 1) break;
  }
  trim(a);
  return {q, a};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  trim(a);
  return a;
}

}  // namespace

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
  if (entries_.size() == 1) {
    const auto& e = entries_[0];
    CycloNumber out = root_of_unity(order() - e.degree, ctx_);
    return out *= Rational(1 / e.value);
  }
  // Extended Euclid: track s with s * a == r (mod Phi).
  QPoly modulus;
  for (auto c : ctx_->cyclo_poly()) modulus.emplace_back(c);
  QPoly r0 = modulus, r1 = coeffs();
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    auto s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw DivisionByZero("element is a zero divisor (not reduced?)");
  const Rational scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  return from_coeffs(ctx_, s1);
}

std::complex<double> CycloNumber::approx_complex() const {
  std::complex<double> sum = 0;
  const double n = static_cast<double>(order());
  for (const auto& e : entries_) {
    const double angle = 2 * std::numbers::pi * e.degree / n;
    sum += e.value.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (auto& e : out.entries_) e.value = -e.value;
  return out;
}

namespace {

void align(CycloNumber& self, const CycloNumber& other, CycloNumber& lifted, const CycloNumber*& rhs) {
  rhs = &other;
  if (self.order() == other.order()) return;
  const auto n = common_order(self.order(), other.order());
  if (self.order() != n) self = self.lift(n);
  if (other.order() != n) {
    lifted = other.lift(n);
    rhs = &lifted;
  }
}

}  // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& other) {
  CycloNumber lifted;
  const CycloNumber* rhs;
  align(*this, other, lifted, rhs);
  if (rhs->is_zero()) return *this;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + rhs->entries_.size());
  auto a = entries_.begin(), ae = entries_.end();
  auto b = rhs->entries_.begin(), be = rhs->entries_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->degree < b->degree)) {
      merged.push_back(std::move(*a++));
    } else if (a == ae || b->degree < a->degree) {
      merged.push_back(*b++);
    } else {
      Rational v = a->value + b->value;
      if (sgn(v) != 0) merged.push_back({a->degree, std::move(v)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& other) { return *this += -other; }

CycloNumber& CycloNumber::operator*=(const Rational& r) {
  if (sgn(r) == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.value *= r;
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& other) {
  *this = *this * other;
  return *this;
}

void CycloNumber::add_product(CycloNumber& acc, const CycloNumber& a, const CycloNumber& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.order() != b.order() || acc.order() != a.order()) {
    acc += a * b;
    return;
  }
  const auto& ctx = *a.ctx_;
  const int phi = ctx.phi();
  // Small cases stay on the sparse path.
  if (a.entries_.size() == 1 && b.entries_.size() == 1 && a.entries_[0].degree + b.entries_[0].degree < phi &&
      acc.is_zero()) {
    acc.entries_.push_back({a.entries_[0].degree + b.entries_[0].degree, a.entries_[0].value * b.entries_[0].value});
    return;
  }
  auto& s = scratch();
  s.prepare(2 * phi);
  int top = 0;
  for (const auto& e : acc.entries_) {
    s.buf[static_cast<std::size_t>(e.degree)] = e.value;
    top = std::max(top, e.degree);
  }
  for (const auto& x : a.entries_)
    for (const auto& y : b.entries_) {
      const int k = x.degree + y.degree;
      mpq_mul(s.tmp.get_mpq_t(), x.value.get_mpq_t(), y.value.get_mpq_t());
      s.buf[static_cast<std::size_t>(k)] += s.tmp;
      top = std::max(top, k);
    }
  reduce_and_collect(ctx, s, top, acc.entries_);
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (a.order() != b.order()) {
    const auto n = common_order(a.order(), b.order());
    return a.lift(n) * b.lift(n);
  }
  CycloNumber out(a.ctx_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.is_rational()) {
    out = b;
    return out *= a.entries_[0].value;
  }
  if (b.is_rational()) {
    out = a;
    return out *= b.entries_[0].value;
  }
  CycloNumber::add_product(out, a, b);
  return out;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.order() == b.order()) return a.entries_ == b.entries_;
  if (a.is_rational() && b.is_rational()) return a.rational_part() == b.rational_part();
  const auto n = checked_lcm(a.order(), b.order());
  return a.lift(n).entries_ == b.lift(n).entries_;
}

std::string CycloNumber::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& e : entries_) {
    if (!first) os << " + ";
    first = false;
    if (e.degree == 0) {
      os << e.value.get_str();
    } else {
      if (e.value != 1) os << '(' << e.value.get_str() << ")*";
      os << "z" << order() << '^' << e.degree;
    }
  }
  return os.str();
}

}  // namespace cubictheta
