#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cubictheta/series.hpp"

namespace cubictheta {

/// Expands a named series (a, b3, c3, eta, E2, E4, E6, huberP, huberPcal,
/// j-invariant, eta-quotient:SPEC, theta:EPS,EPS'[:j]) below q^order.
/// Throws UnknownName for an unknown name and ParseError for a bad spec.
PiSeries expand_series(const std::string& name, const Rational& order);

/// Runs the command line `args` (without the program name). Data goes to
/// `out`, diagnostics to `err`. Returns the process exit code: 0 success,
/// 1 a failed verification, 2 an unknown name, id, kind or flag, 3 a
/// malformed spec string.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubictheta
