#include "cubictheta/identities.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "cubictheta/errors.hpp"

namespace cubictheta {

std::string_view category_name(Category c) {
  switch (c) {
    case Category::ode: return "ode";
    case Category::qseries: return "qseries";
    case Category::theta_const: return "theta-const";
    case Category::sampled_point: return "sampled-point";
    case Category::eisenstein: return "eisenstein";
  }
  return "?";
}

Category parse_category(std::string_view name) {
  for (auto c : {Category::ode, Category::qseries, Category::theta_const, Category::sampled_point, Category::eisenstein})
    if (category_name(c) == name) return c;
  throw UnknownIdentity("unknown category '" + std::string(name) + "'");
}

const IdentityRecord& find_identity(std::string_view id) {
  for (const auto& r : registry())
    if (r.id == id) return r;
  throw UnknownIdentity("no identity named '" + std::string(id) + "'");
}

VerifyReport verify(const IdentityRecord& record, std::int64_t order, const Tamper& tamper) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.id = record.id;
  rep.requested_order = order;
  rep.achieved_order = Rational(order);
  std::optional<Rational> achieved;
  try {
    const auto members = record.builder(BuildEnv{Rational(order), tamper});
    rep.pass = true;
    for (const auto& m : members) {
      const int grade = m.grade.value_or(record.expected_grade);
      for (const auto* side : {&m.lhs, &m.rhs})
        if (!side->is_zero() && side->pi_grade() != grade)
          throw PiGradeMismatch("side has pi grade " + std::to_string(side->pi_grade()) + ", expected " +
                                std::to_string(grade));
      const auto cmp = equal_to_order(m.lhs, m.rhs);
      if (cmp.achieved && (!achieved || *cmp.achieved < *achieved)) achieved = cmp.achieved;
      if (!cmp.equal && rep.pass) {
        rep.pass = false;
        rep.first_discrepancy = cmp.first_discrepancy;
        rep.member = m.label;
      }
    }
  } catch (const Error& e) {
    rep.pass = false;
    rep.error = e.what();
  }
  if (achieved) rep.achieved_order = *achieved;
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

VerifyReport verify(std::string_view id, std::int64_t order) { return verify(find_identity(id), order); }

std::vector<VerifyReport> verify_records(const std::vector<IdentityRecord>& records, std::int64_t order, unsigned jobs) {
  std::vector<VerifyReport> out(records.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) out[i] = verify(records[i], order);
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(records.size())));
  if (jobs == 1) {
    worker();
    return out;
  }
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  pool.clear();
  return out;
}

std::vector<VerifyReport> verify_all(std::int64_t order, std::optional<Category> category, unsigned jobs) {
  std::vector<IdentityRecord> chosen;
  for (const auto& r : registry())
    if (!category || r.category == *category) chosen.push_back(r);
  return verify_records(chosen, order, jobs);
}

nlohmann::json report_to_json(const VerifyReport& r) {
  nlohmann::json j{
      {"id", r.id},
      {"requested_order", r.requested_order},
      {"achieved_order", to_string(r.achieved_order)},
      {"verdict", r.pass ? "pass" : "fail"},
      {"first_discrepancy", nullptr},
      {"ms", r.ms},
  };
  if (r.first_discrepancy)
    j["first_discrepancy"] = {{"exponent", to_string(r.first_discrepancy->exponent)},
                              {"lhs", r.first_discrepancy->lhs.to_string()},
                              {"rhs", r.first_discrepancy->rhs.to_string()},
                              {"member", r.member}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace cubictheta
