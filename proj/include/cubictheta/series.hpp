#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubictheta/cyclo.hpp"
#include "cubictheta/rational.hpp"

namespace cubictheta {

/// Exponents are exact rationals; they live on the grid (1/D)Z of a series.
using RationalExp = Rational;

/// Exponent grid and coefficient field of a series.
struct SeriesContext {
  std::int64_t exponent_denominator = 72;
  std::int64_t cyclo_order = 72;

  bool operator==(const SeriesContext&) const = default;
};

/// The smallest context containing both; throws ContextMismatch when the
/// cyclotomic order would exceed `cyclo_order_cap()`.
SeriesContext unify(const SeriesContext& a, const SeriesContext& b);

/// Upper bound on the cyclotomic order reachable through unification (default 2520).
std::int64_t cyclo_order_cap();
void set_cyclo_order_cap(std::int64_t cap);

/// Truncated Laurent series in q^(1/D) with cyclotomic coefficients, times pi^grade.
///
/// Coefficients are exactly known for every exponent below `trunc()/D`; stored
/// terms are nonzero, sorted and strictly below that bound. An exact series
/// (a polynomial known completely) carries `kExact` as its bound.
class PiSeries {
 public:
  static constexpr std::int64_t kExact = INT64_MAX / 4;

  struct Term {
    std::int64_t exponent;  // numerator over D
    CycloNumber coeff;
  };

  /// The exact zero series of grade 0.
  PiSeries();

  /// Canonicalizes: lifts coefficients to the context order, merges equal
  /// exponents, drops zeros and everything at or above `trunc`.
  PiSeries(SeriesContext ctx, int pi_grade, std::vector<Term> terms, std::int64_t trunc);

  static PiSeries zero(SeriesContext ctx, int pi_grade = 0, std::int64_t trunc = kExact);
  static PiSeries constant(const CycloNumber& c, SeriesContext ctx, int pi_grade = 0);
  static PiSeries constant(const Rational& c, SeriesContext ctx = {}, int pi_grade = 0);
  /// c q^e, exact. Raises D as needed to place e on the grid.
  static PiSeries monomial(const CycloNumber& c, const RationalExp& e, SeriesContext ctx, int pi_grade = 0);
  static PiSeries monomial(const Rational& c, const RationalExp& e, SeriesContext ctx = {}, int pi_grade = 0);

  const SeriesContext& context() const { return ctx_; }
  std::int64_t denominator() const { return ctx_.exponent_denominator; }
  std::int64_t cyclo_order() const { return ctx_.cyclo_order; }
  int pi_grade() const { return grade_; }
  const std::vector<Term>& terms() const { return terms_; }

  std::int64_t trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ >= kExact; }
  /// Truncation bound as a q-exponent; nullopt for exact series.
  std::optional<RationalExp> trunc_exponent() const;

  bool is_zero() const { return terms_.empty(); }
  /// Smallest stored exponent numerator, or the bound for a zero series.
  std::int64_t lead() const { return terms_.empty() ? trunc_ : terms_.front().exponent; }
  std::optional<RationalExp> lead_exponent() const;

  /// Coefficient of q^e; zero off the grid. Throws UnknownCoefficient at or
  /// above the truncation bound.
  CycloNumber coefficient(const RationalExp& e) const;

  /// True when every coefficient lies in Q.
  bool is_rational() const;

  /// Same series on a finer grid / larger field (D | D', N | N').
  PiSeries with_context(const SeriesContext& target) const;

  /// Forgets everything at or above q^bound.
  PiSeries truncated(const RationalExp& bound) const;

  /// Reduces D to the smallest grid holding all terms and the bound.
  PiSeries compacted() const;

 private:
  SeriesContext ctx_{1, 1};
  int grade_ = 0;
  std::vector<Term> terms_;
  std::int64_t trunc_ = kExact;

  friend PiSeries add(const PiSeries&, const PiSeries&);
  friend PiSeries mul(const PiSeries&, const PiSeries&);
  friend PiSeries invert(const PiSeries&);
};

PiSeries add(const PiSeries& f, const PiSeries& g);
PiSeries neg(const PiSeries& f);
PiSeries sub(const PiSeries& f, const PiSeries& g);
PiSeries mul(const PiSeries& f, const PiSeries& g);
PiSeries invert(const PiSeries& f);
PiSeries pow(const PiSeries& f, unsigned n);

/// q d/dq.
PiSeries theta_q(const PiSeries& f);

/// q -> q^k for a positive rational k.
PiSeries substitute_power(const PiSeries& f, const Rational& k);

/// c * pi^dpi * f.
PiSeries scale(const PiSeries& f, const CycloNumber& c, int dpi = 0);
PiSeries scale(const PiSeries& f, const Rational& c, int dpi = 0);

inline PiSeries operator+(const PiSeries& f, const PiSeries& g) { return add(f, g); }
inline PiSeries operator-(const PiSeries& f, const PiSeries& g) { return sub(f, g); }
inline PiSeries operator-(const PiSeries& f) { return neg(f); }
inline PiSeries operator*(const PiSeries& f, const PiSeries& g) { return mul(f, g); }
inline PiSeries operator*(const Rational& c, const PiSeries& f) { return scale(f, c); }
inline PiSeries operator*(const CycloNumber& c, const PiSeries& f) { return scale(f, c); }

struct Discrepancy {
  RationalExp exponent;
  CycloNumber lhs;
  CycloNumber rhs;
};

/// Outcome of a coefficientwise comparison below the common truncation bound.
struct Comparison {
  bool equal = true;
  /// Common bound; nullopt when both series are exact.
  std::optional<RationalExp> achieved;
  std::optional<Discrepancy> first_discrepancy;
};

/// Compares f and g below min(trunc f, trunc g). Throws PiGradeMismatch when
/// both are nonzero with different grades.
Comparison equal_to_order(const PiSeries& f, const PiSeries& g);

}  // namespace cubictheta
