#include "cuspforge/verdict.hpp"

#include "cuspforge/error.hpp"

namespace cuspforge {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Weierstrass: return "Weierstrass";
    case Status::NotWeierstrass: return "NotWeierstrass";
    case Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(Rule r) noexcept {
  switch (r) {
    case Rule::SchoenebergFixedPoint: return "SchoenebergFixedPoint";
    case Rule::Lewittes: return "Lewittes";
    case Rule::LemmaGenus: return "LemmaGenus";
    case Rule::LemmaCuspIneq: return "LemmaCuspIneq";
    case Rule::FrickeDualityReduction: return "FrickeDualityReduction";
    case Rule::FactTable: return "FactTable";
    case Rule::AtkinClassification: return "AtkinClassification";
    case Rule::OggClassification: return "OggClassification";
    case Rule::LehnerNewmanClassification: return "LehnerNewmanClassification";
    case Rule::EtaCertificate: return "EtaCertificate";
  }
  return "?";
}

nlohmann::ordered_json rational_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return to_string(r);
}

Rational rational_from_json(const nlohmann::ordered_json& j) {
  if (j.is_number_integer()) return Rational(j.get<Int>());
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

namespace {

bool evaluate(const Rational& lhs, std::string_view rel, const Rational& rhs) {
  if (rel == ">=") return lhs >= rhs;
  if (rel == "==") return lhs == rhs;
  fail(ErrorKind::InvalidArgument, "unknown relation in certificate step");
}

}  // namespace

CertStep inequality_step(Rule rule, nlohmann::ordered_json context, const Rational& lhs,
                         Relation rel, const Rational& rhs) {
  const char* op = rel == Relation::GreaterEqual ? ">=" : "==";
  context["lhs"] = rational_json(lhs);
  context["relation"] = op;
  context["rhs"] = rational_json(rhs);
  context["holds"] = evaluate(lhs, op, rhs);
  return CertStep{rule, std::move(context)};
}

bool recheck(const CertStep& step) {
  if (!step.data.contains("lhs")) return true;
  const bool now = evaluate(rational_from_json(step.data["lhs"]),
                            step.data["relation"].get<std::string>(),
                            rational_from_json(step.data["rhs"]));
  return now == step.data["holds"].get<bool>();
}

bool holds(const CertStep& step) {
  return !step.data.contains("holds") || step.data["holds"].get<bool>();
}

}  // namespace cuspforge
