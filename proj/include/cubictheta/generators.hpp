#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cubictheta/series.hpp"

namespace cubictheta {

// Every generator returns a grade-0 series whose coefficients are exactly
// known for all exponents below `order`.

/// One factor eta(m tau)^e.
struct EtaFactor {
  Rational multiplier;
  int exponent;
};

/// scalar * q^shift * prod eta(m tau)^e. The shift is extra to the eta
/// prefactors q^(m/24).
struct EtaQuotientSpec {
  Rational scalar{1};
  Rational shift{0};
  std::vector<EtaFactor> factors;

  /// shift + sum m e / 24.
  Rational leading_exponent() const;

  /// Grammar: tokens joined by '*'; "m^e" with m = p or p/q and e a signed
  /// integer, an optional leading scalar "p/q", and "q^{p/q}" (or "q^p").
  /// Example: "27*3^9*1^-3". Throws ParseError.
  static EtaQuotientSpec parse(std::string_view text);
  std::string to_string() const;
};

/// eta^9(tau) / eta^3(3 tau), i.e. b^3.
EtaQuotientSpec b3_spec();
/// 27 eta^9(3 tau) / eta^3(tau), i.e. c^3.
EtaQuotientSpec c3_spec();

/// (q^m; q^m)_inf.
PiSeries q_pochhammer(const Rational& m, const Rational& order, SeriesContext ctx = {});
/// prod_{n >= 0} (1 - q^(r + m n)) for 0 < r.
PiSeries residue_product(const Rational& r, const Rational& m, const Rational& order, SeriesContext ctx = {});

PiSeries eta(const Rational& m, const Rational& order, SeriesContext ctx = {});
PiSeries eta_quotient(const EtaQuotientSpec& spec, const Rational& order, SeriesContext ctx = {});

/// E_k(q^m) for k in {2, 4, 6}.
PiSeries eisenstein(int k, std::int64_t m, const Rational& order, SeriesContext ctx = {});

/// sum over (m, n) in Z^2 of q^(m^2 + m n + n^2), by lattice enumeration.
PiSeries a_lattice(const Rational& order, SeriesContext ctx = {});
/// 1 + 6 sum (d_{1,3}(n) - d_{2,3}(n)) q^n.
PiSeries a_divisor(const Rational& order, SeriesContext ctx = {});

/// 1 - 9 sum q^n sum_{d|n} d^2 (d/3).
PiSeries b_cubed_series(const Rational& order, SeriesContext ctx = {});
/// 27 sum q^n sum_{d|n} d^2 ((n/d)/3).
PiSeries c_cubed_series(const Rational& order, SeriesContext ctx = {});

/// 1 - 6 sum cos(2 n pi / 3) n q^n / (1 - q^n).
PiSeries huber_P_script(const Rational& order, SeriesContext ctx = {});
/// 9 sum n (q^n + q^(2n)) / (1 - q^(3n)).
PiSeries huber_P_cal(const Rational& order, SeriesContext ctx = {});

/// 1 + 3 sum q^n sum_{d|n} d^4 (d/3).
PiSeries a_sq_b3_series(const Rational& order, SeriesContext ctx = {});
/// 27 sum q^n sum_{d|n} d^4 ((n/d)/3).
PiSeries a_sq_c3_series(const Rational& order, SeriesContext ctx = {});

/// Divisor-sum closed form of a^k for 1 <= k <= 6.
PiSeries a_power_closed_form(int k, const Rational& order, SeriesContext ctx = {});

/// 1 + 3 sum (sigma_1(n) - 9 sigma_1(n/9)) q^n.
PiSeries eta10_series(const Rational& order, SeriesContext ctx = {});
/// sum sigma_1(3n+1) q^(3n+1) - sum sigma_1(3n+2) q^(3n+2).
PiSeries eta339_series(const Rational& order, SeriesContext ctx = {});

/// 1728 E4^3 / (E4^3 - E6^2), starting at q^-1.
PiSeries j_invariant(const Rational& order, SeriesContext ctx = {});

/// Series with c[k] at q^(start + k step), known below q^order.
PiSeries from_dense(const std::vector<Rational>& c, const Rational& start, const Rational& step,
                    const Rational& order, SeriesContext ctx = {});

}  // namespace cubictheta
