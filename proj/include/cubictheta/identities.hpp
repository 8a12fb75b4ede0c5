#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cubictheta/series.hpp"

namespace cubictheta {

enum class Category { ode, qseries, theta_const, sampled_point, eisenstein };

std::string_view category_name(Category c);
/// Throws UnknownIdentity for names outside the five categories.
Category parse_category(std::string_view name);

/// What a builder sees: the requested order and a hook through which every
/// generated input series passes. The default hook is the identity; tests
/// use it to perturb a single generator.
using Tamper = std::function<PiSeries(std::string_view source, PiSeries)>;

struct BuildEnv {
  Rational order;
  Tamper tamper;

  PiSeries use(std::string_view source, PiSeries s) const { return tamper ? tamper(source, std::move(s)) : s; }
};

/// One exact comparison inside an identity.
struct Member {
  std::string label;
  PiSeries lhs;
  PiSeries rhs;
  /// Overrides the record's expected grade (families mixing derivative orders).
  std::optional<int> grade = std::nullopt;
};

struct IdentityRecord {
  std::string id;
  std::string description;
  std::string anchor;
  Category category;
  int expected_grade;
  std::function<std::vector<Member>(const BuildEnv&)> builder;
};

struct VerifyReport {
  std::string id;
  std::int64_t requested_order = 0;
  /// Smallest bound below which every member was compared.
  Rational achieved_order;
  bool pass = false;
  std::optional<Discrepancy> first_discrepancy;
  /// Member holding the discrepancy or the error.
  std::string member;
  /// Set when building or comparing raised (grade mismatch, context cap, ...).
  std::string error;
  double ms = 0;
};

/// The full registry, in a fixed order.
const std::vector<IdentityRecord>& registry();

/// Throws UnknownIdentity.
const IdentityRecord& find_identity(std::string_view id);

VerifyReport verify(const IdentityRecord& record, std::int64_t order, const Tamper& tamper = {});
VerifyReport verify(std::string_view id, std::int64_t order);

/// Runs every record (optionally one category) on `jobs` threads. Reports come
/// back in registry order whatever the completion order.
std::vector<VerifyReport> verify_all(std::int64_t order, std::optional<Category> category = std::nullopt,
                                     unsigned jobs = 1);
std::vector<VerifyReport> verify_records(const std::vector<IdentityRecord>& records, std::int64_t order,
                                         unsigned jobs = 1);

/// {id, requested_order, achieved_order, verdict, first_discrepancy, ms}.
nlohmann::json report_to_json(const VerifyReport& r);

}  // namespace cubictheta
