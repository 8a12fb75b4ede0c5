#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "cubictheta/rational.hpp"

namespace cubictheta {

/// Integer polynomial, ascending coefficients.
using IntPoly = std::vector<std::int64_t>;

/// The N-th cyclotomic polynomial, obtained by dividing x^N - 1 by every
/// Phi_d with d | N, d < N.
IntPoly cyclotomic_polynomial(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

/// Shared, immutable description of Q(zeta_N).
///
/// Contexts are interned: `get(N)` returns the same object for the same N, so
/// pointer equality is order equality.
class CycloContext {
 public:
  using Ptr = std::shared_ptr<const CycloContext>;

  static Ptr get(std::int64_t order);

  std::int64_t order() const { return order_; }
  int phi() const { return phi_; }
  /// Phi_N, ascending, length phi + 1, monic.
  const IntPoly& cyclo_poly() const { return poly_; }

  /// Nonzero terms of Phi_N below the leading one.
  const std::vector<std::pair<int, std::int64_t>>& tail() const { return tail_; }

  /// Sparse residue of x^k mod Phi_N for phi <= k <= 2 phi - 2.
  const std::vector<std::pair<int, std::int64_t>>& high_power(int k) const {
    return high_powers_[static_cast<std::size_t>(k - phi_)];
  }

  /// Residue of x^k mod Phi_N for any k in [0, N).
  std::vector<std::pair<int, std::int64_t>> power_residue(std::int64_t k) const;

  explicit CycloContext(std::int64_t order);

 private:
  std::int64_t order_;
  int phi_;
  IntPoly poly_;
  std::vector<std::pair<int, std::int64_t>> tail_;
  std::vector<std::vector<std::pair<int, std::int64_t>>> high_powers_;
};

/// Exact element of Q(zeta_N), kept as its canonical residue modulo Phi_N.
///
/// Storage is sparse: only the nonzero power-basis coefficients, sorted by
/// degree. Two numbers over the same context are equal iff their entries match.
class CycloNumber {
 public:
  struct Entry {
    int degree;
    Rational value;
    bool operator==(const Entry&) const = default;
  };

  /// Zero of Q (order 1).
  CycloNumber();
  explicit CycloNumber(CycloContext::Ptr ctx);
  CycloNumber(CycloContext::Ptr ctx, const Rational& value);
  CycloNumber(CycloContext::Ptr ctx, long value) : CycloNumber(std::move(ctx), Rational(value)) {}

  /// zeta_N^k with k reduced modulo N.
  static CycloNumber root_of_unity(std::int64_t k, CycloContext::Ptr ctx);

  /// Reduces an arbitrary-length power-basis vector modulo Phi_N.
  static CycloNumber from_coeffs(CycloContext::Ptr ctx, const std::vector<Rational>& coeffs);

  /// Builds from already-canonical sparse entries (degree < phi, nonzero, sorted).
  static CycloNumber from_entries(CycloContext::Ptr ctx, std::vector<Entry> entries);

  const CycloContext::Ptr& context() const { return ctx_; }
  std::int64_t order() const { return ctx_->order(); }

  /// Dense canonical coefficient list of length phi.
  std::vector<Rational> coeffs() const;
  const std::vector<Entry>& entries() const { return entries_; }

  bool is_zero() const { return entries_.empty(); }
  bool is_one() const;
  bool is_rational() const { return entries_.empty() || (entries_.size() == 1 && entries_[0].degree == 0); }
  Rational rational_part() const;

  /// Image under zeta_N -> zeta_M^(M/N).
  CycloNumber lift(std::int64_t m) const;

  CycloNumber inverse() const;

  /// Floating evaluation at exp(2 pi i / N); diagnostics only.
  std::complex<double> approx_complex() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& other);
  CycloNumber& operator-=(const CycloNumber& other);
  CycloNumber& operator*=(const CycloNumber& other);
  CycloNumber& operator*=(const Rational& r);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator*(CycloNumber a, const Rational& r) { return a *= r; }
  friend CycloNumber operator*(const Rational& r, CycloNumber a) { return a *= r; }

  /// acc += a * b without materializing the product separately.
  static void add_product(CycloNumber& acc, const CycloNumber& a, const CycloNumber& b);

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  /// Power-basis rendering such as "1/2 + 3*z^5" with z = zeta_N.
  std::string to_string() const;

 private:
  CycloContext::Ptr ctx_;
  std::vector<Entry> entries_;
};

/// Brings two numbers to a common order. Throws ContextMismatch when neither
/// order divides the other.
std::int64_t common_order(std::int64_t n, std::int64_t m);

}  // namespace cubictheta
