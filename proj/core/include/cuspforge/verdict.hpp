#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cuspforge/arith.hpp"

namespace cuspforge {

enum class Status { Weierstrass, NotWeierstrass, Unknown };

enum class Rule {
  SchoenebergFixedPoint,
  Lewittes,
  LemmaGenus,
  LemmaCuspIneq,
  FrickeDualityReduction,
  FactTable,
  AtkinClassification,
  OggClassification,
  LehnerNewmanClassification,
  EtaCertificate,
};

std::string_view to_string(Status s) noexcept;
std::string_view to_string(Rule r) noexcept;

enum class Relation { GreaterEqual, Equal };

/// One link of a certificate chain. Inequality steps store lhs, relation,
/// rhs and holds in `data` so a reader can re-evaluate them.
struct CertStep {
  Rule rule;
  nlohmann::ordered_json data;
};

CertStep inequality_step(Rule rule, nlohmann::ordered_json context, const Rational& lhs,
                         Relation rel, const Rational& rhs);

/// Re-evaluates a recorded inequality and compares with its "holds" flag.
/// Steps without an inequality recheck trivially.
bool recheck(const CertStep& step);

bool holds(const CertStep& step);

struct Verdict {
  Status status = Status::Unknown;
  std::optional<Int> weight;
  std::vector<CertStep> certificate;
  std::optional<Rule> decided_by;
};

nlohmann::ordered_json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::ordered_json& j);

}  // namespace cuspforge
