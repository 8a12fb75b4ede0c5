#include "cubictheta/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubictheta/arith.hpp"
#include "cubictheta/errors.hpp"
#include "cubictheta/generators.hpp"
#include "cubictheta/identities.hpp"
#include "cubictheta/series_json.hpp"
#include "cubictheta/theta.hpp"

namespace cubictheta {

namespace {

const SeriesContext k1{1, 1};

// Exit codes.
constexpr int kFail = 1;
constexpr int kUnknown = 2;
constexpr int kMalformed = 3;

std::int64_t effective_order(std::int64_t order, std::ostream& err) {
  if (const char* cap = std::getenv("CUBICTHETA_ORDER_CAP")) {
    const std::int64_t c = std::atoll(cap);
    if (c > 0 && order > c) {
      err << "order " << order << " capped at " << c << " by CUBICTHETA_ORDER_CAP\n";
      return c;
    }
  }
  return order;
}

// theta:EPS,EPS'[:j] or theta:EPS/EPS' with integer characteristics.
PiSeries expand_theta(std::string_view body, const Rational& order) {
  std::string_view chars = body;
  unsigned j = 0;
  if (const auto colon = body.find(':'); colon != std::string_view::npos) {
    chars = body.substr(0, colon);
    const auto js = std::string(body.substr(colon + 1));
    if (js.empty() || !std::all_of(js.begin(), js.end(), ::isdigit)) throw ParseError("bad derivative order '" + js + "'");
    j = static_cast<unsigned>(std::stoul(js));
  }
  std::string_view e, ep;
  if (const auto comma = chars.find(','); comma != std::string_view::npos) {
    e = chars.substr(0, comma);
    ep = chars.substr(comma + 1);
  } else {
    const auto slash = chars.find('/');
    if (slash == std::string_view::npos || chars.find('/', slash + 1) != std::string_view::npos)
      throw ParseError("theta characteristic must read EPS,EPS' (or EPS/EPS' for integers)");
    e = chars.substr(0, slash);
    ep = chars.substr(slash + 1);
  }
  return theta_deriv(j, {parse_rational(e), parse_rational(ep)}, order, k1);
}

PiSeries expand_named_impl(const std::string& name, const Rational& order) {
  if (name == "a") return a_lattice(order, k1);
  if (name == "b3") return eta_quotient(b3_spec(), order, k1);
  if (name == "c3") return eta_quotient(c3_spec(), order, k1);
  if (name == "eta") return eta(Rational(1), order, k1);
  if (name == "E2") return eisenstein(2, 1, order, k1);
  if (name == "E4") return eisenstein(4, 1, order, k1);
  if (name == "E6") return eisenstein(6, 1, order, k1);
  if (name == "huberP") return huber_P_script(order, k1);
  if (name == "huberPcal") return huber_P_cal(order, k1);
  if (name == "j-invariant") return j_invariant(order, k1);
  if (name.starts_with("eta-quotient:")) return eta_quotient(EtaQuotientSpec::parse(name.substr(13)), order, k1);
  if (name.starts_with("theta:")) return expand_theta(std::string_view(name).substr(6), order);
  throw UnknownName("unknown series '" + name + "'");
}

// One line per point of the series' own lattice (lead plus multiples of the gcd
// of the exponent gaps, at most 1) up to the truncation bound.
void print_series(const PiSeries& f, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << series_to_json(f).dump() << '\n';
    return;
  }
  if (format == "csv" && !f.is_rational()) throw ParseError("csv output needs rational coefficients");
  const auto d = f.denominator();
  const char sep = format == "csv" ? ',' : ' ';
  if (format == "csv") out << "exponent,coefficient\n";
  if (f.is_zero()) return;
  const auto& terms = f.terms();
  std::int64_t step = d;
  for (const auto& t : terms) step = std::gcd(step, t.exponent - f.lead());
  std::size_t k = 0;
  for (std::int64_t e = f.lead(); e < f.trunc(); e += step) {
    if (f.is_exact() && k == terms.size()) break;
    std::string c = "0";
    if (k < terms.size() && terms[k].exponent == e) c = terms[k++].coeff.to_string();
    out << to_string(make_rational(e, d)) << sep << c << '\n';
  }
}

int cmd_expand(const std::string& name, std::int64_t order, const std::string& format, std::ostream& out) {
  print_series(expand_series(name, Rational(order)), format, out);
  return 0;
}

std::string plain_report(const VerifyReport& r) {
  std::string line = (r.pass ? "PASS " : "FAIL ") + r.id + " order=" + std::to_string(r.requested_order) +
                     " achieved=" + to_string(r.achieved_order);
  if (r.first_discrepancy)
    line += " member=" + r.member + " at q^" + to_string(r.first_discrepancy->exponent) + ": " +
            r.first_discrepancy->lhs.to_string() + " != " + r.first_discrepancy->rhs.to_string();
  if (!r.error.empty()) line += " error=" + r.error;
  char ms[32];
  std::snprintf(ms, sizeof ms, " %.1fms", r.ms);
  return line + ms;
}

int cmd_verify(const std::vector<std::string>& ids, bool all, const std::string& category, std::int64_t order,
               unsigned jobs, const std::string& format, std::ostream& out, std::ostream& err) {
  std::vector<IdentityRecord> chosen;
  if (all) {
    chosen = registry();
  } else if (!category.empty()) {
    const auto c = parse_category(category);
    for (const auto& r : registry())
      if (r.category == c) chosen.push_back(r);
  } else if (!ids.empty()) {
    for (const auto& id : ids) chosen.push_back(find_identity(id));
  } else {
    err << "verify needs --id, --all or --category\n";
    return kUnknown;
  }
  const auto reports = verify_records(chosen, order, jobs);
  bool pass = true;
  if (format == "csv") out << "id,verdict,requested_order,achieved_order,ms\n";
  for (const auto& r : reports) {
    pass = pass && r.pass;
    if (format == "json")
      out << report_to_json(r).dump() << '\n';
    else if (format == "csv")
      out << r.id << ',' << (r.pass ? "pass" : "fail") << ',' << r.requested_order << ','
          << to_string(r.achieved_order) << ',' << r.ms << '\n';
    else
      out << plain_report(r) << '\n';
  }
  return pass ? 0 : kFail;
}

using Row = std::vector<std::pair<std::string, nlohmann::json>>;

void print_rows(const std::vector<Row>& rows, const std::string& format, std::ostream& out) {
  if (format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json obj;
      for (const auto& [k, v] : row) obj[k] = v;
      arr.push_back(obj);
    }
    out << arr.dump() << '\n';
    return;
  }
  const char sep = format == "csv" ? ',' : ' ';
  auto text = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (format == "csv" && !rows.empty()) {
    for (std::size_t i = 0; i < rows[0].size(); ++i) out << (i ? "," : "") << rows[0][i].first;
    out << '\n';
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? std::string(1, sep) : "") << text(row[i].second);
    out << '\n';
  }
}

int cmd_table(const std::string& kind, std::int64_t n_max, std::optional<int> k, const std::string& format,
              std::ostream& out) {
  std::vector<Row> rows;
  const Rational order(n_max + 1);
  if (kind == "representations") {
    const auto a = a_lattice(order, k1);
    for (std::int64_t n = 1; n <= n_max; ++n)
      rows.push_back({{"n", n}, {"count", a.coefficient(Rational(n)).to_string()}});
  } else if (kind == "divisor") {
    const int kk = k.value_or(1);
    if (kk < 0) throw UnknownName("divisor power must be non-negative");
    for (std::int64_t n = 1; n <= n_max; ++n)
      rows.push_back({{"n", n}, {"sigma", sigma(static_cast<unsigned>(kk), Rational(n)).get_str()}});
  } else if (kind == "apow") {
    const int kk = k.value_or(2);
    if (kk < 1 || kk > 6) throw UnknownName("apow needs 1 <= k <= 6");
    const auto conv = pow(a_lattice(order, k1), static_cast<unsigned>(kk));
    const auto closed = a_power_closed_form(kk, order, k1);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const auto x = conv.coefficient(Rational(n)), y = closed.coefficient(Rational(n));
      rows.push_back({{"n", n}, {"convolution", x.to_string()}, {"closed_form", y.to_string()}, {"match", x == y}});
    }
  } else {
    throw UnknownName("unknown table kind '" + kind + "'");
  }
  print_rows(rows, format, out);
  return 0;
}

int cmd_list(const std::string& category, const std::string& format, std::ostream& out) {
  std::optional<Category> c;
  if (!category.empty()) c = parse_category(category);
  std::vector<Row> rows;
  for (const auto& r : registry())
    if (!c || r.category == *c)
      rows.push_back({{"id", r.id},
                      {"category", std::string(category_name(r.category))},
                      {"grade", r.expected_grade},
                      {"description", r.description},
                      {"anchor", r.anchor}});
  if (format == "plain") {
    for (const auto& row : rows)
      out << row[0].second.get<std::string>() << "  [" << row[1].second.get<std::string>() << "]  "
          << row[3].second.get<std::string>() << '\n';
    return 0;
  }
  print_rows(rows, format, out);
  return 0;
}

}  // namespace

PiSeries expand_series(const std::string& name, const Rational& order) { return expand_named_impl(name, order); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-series for level-three theta functions and their identities", "cubictheta"};
  app.require_subcommand(1);

  std::int64_t order = 40;
  std::string format = "plain";
  const auto formats = CLI::IsMember({"plain", "json", "csv"});

  auto* expand = app.add_subcommand("expand", "expand a named series below q^order");
  std::string name;
  expand->add_option("name", name, "a, b3, c3, eta, eta-quotient:SPEC, E2, E4, E6, theta:EPS,EPS'[:j], huberP, "
                                   "huberPcal, j-invariant")
      ->required();
  expand->add_option("--order", order)->check(CLI::PositiveNumber);
  expand->add_option("--format", format)->check(formats);

  auto* verify = app.add_subcommand("verify", "verify registry identities coefficient by coefficient");
  std::vector<std::string> ids;
  bool all = false;
  std::string category;
  unsigned jobs = 1;
  verify->add_option("--id", ids);
  verify->add_flag("--all", all);
  verify->add_option("--category", category);
  verify->add_option("--order", order)->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(formats);

  auto* table = app.add_subcommand("table", "coefficient tables");
  std::string kind;
  std::int64_t n_max = 20;
  std::optional<int> k;
  table->add_option("--kind", kind, "representations, divisor or apow")->required();
  table->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
  table->add_option("--k", k);
  table->add_option("--format", format)->check(formats);

  auto* list = app.add_subcommand("list", "list registry identities");
  list->add_option("--category", category);
  list->add_option("--format", format)->check(formats);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUnknown;
  }

  try {
    if (*expand) return cmd_expand(name, effective_order(order, err), format, out);
    if (*verify) return cmd_verify(ids, all, category, effective_order(order, err), jobs, format, out, err);
    if (*table) return cmd_table(kind, n_max, k, format, out);
    return cmd_list(category, format, out);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kMalformed;
  } catch (const UnknownIdentity& e) {
    err << e.what() << '\n';
    return kUnknown;
  } catch (const UnknownName& e) {
    err << e.what() << '\n';
    return kUnknown;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kFail;
  }
}

}  // namespace cubictheta
