#include "cuspforge/serialize.hpp"

#include <sstream>

#include "cuspforge/error.hpp"

namespace cuspforge {

namespace {

std::string big_rational_string(const BigRational& c) {
  std::ostringstream os;
  os << numerator(c);
  if (denominator(c) != 1) os << '/' << denominator(c);
  return os.str();
}

Json ordered_cusps(const std::vector<CuspClass>& cs) {
  Json arr = Json::array();
  for (const auto& c : cs) arr.push_back(c.label());
  return arr;
}

std::optional<Rule> rule_from_string(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(Rule::EtaCertificate); ++i) {
    auto r = static_cast<Rule>(i);
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

Status status_from_string(const std::string& s) {
  for (auto st : {Status::Weierstrass, Status::NotWeierstrass, Status::Unknown})
    if (to_string(st) == s) return st;
  fail(ErrorKind::InvalidArgument, "unknown status \"" + s + "\"");
}

}  // namespace

Json to_json(const DeltaSubgroup& delta) {
  return Json(std::vector<Int>(delta.elements().begin(), delta.elements().end()));
}

Json to_json(const CuspClass& c) {
  const auto w = width_and_stabilizer_sign(c);
  return {{"x", c.x},         {"y", c.y},           {"d", c.d},
          {"e", c.e},         {"irregular", c.irregular}, {"width", w.width},
          {"plus_sign", w.plus_sign}};
}

Json to_json(const CuspAtlas& atlas) {
  Json cusps = Json::array();
  for (const auto& entry : atlas.entries) {
    Json c = to_json(entry.cusp);
    c["x1_fiber"] = entry.x1_fiber;
    cusps.push_back(std::move(c));
  }
  return {{"N", atlas.group.level().value()},
          {"group", atlas.group.name()},
          {"count", atlas.size()},
          {"cusps", std::move(cusps)}};
}

Json to_json(const CuspOrbits& orbits) {
  Json arr = Json::array();
  for (const auto& orbit : orbits.orbits) arr.push_back(ordered_cusps(orbit));
  Json out{{"N", orbits.group.level().value()},
           {"group", orbits.group.name()},
           {"generators", orbits.generators},
           {"orbits", std::move(arr)}};
  if (orbits.possibly_incomplete) out["possibly_incomplete"] = true;
  return out;
}

Json to_json(const GenusProfile& p) {
  return {{"N", p.level.value()},         {"delta", to_json(p.delta)},
          {"mu", rational_json(p.mu)},    {"nu2", rational_json(p.nu2)},
          {"nu3", rational_json(p.nu3)},  {"nu_inf", rational_json(p.nu_inf)},
          {"g", p.g}};
}

Json to_json(const CertStep& step) {
  return {{"rule", std::string(to_string(step.rule))}, {"data", step.data}};
}

Json to_json(const Verdict& v) {
  Json out{{"status", std::string(to_string(v.status))}};
  if (v.weight) out["weight"] = *v.weight;
  if (v.decided_by) out["decided_by"] = std::string(to_string(*v.decided_by));
  Json cert = Json::array();
  for (const auto& s : v.certificate) cert.push_back(to_json(s));
  out["certificate"] = std::move(cert);
  return out;
}

Json verdict_json(Int level, Int d, const Verdict& v) {
  Json out{{"N", level}, {"d", d}};
  out.update(to_json(v));
  return out;
}

Json verdict_x0_json(Int p, Int m, const Verdict& v) {
  Json out{{"p", p}, {"M", m}, {"N", p * p * m}};
  out.update(to_json(v));
  return out;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.status = status_from_string(j.at("status").get<std::string>());
  if (j.contains("weight")) v.weight = j.at("weight").get<Int>();
  if (j.contains("decided_by")) v.decided_by = rule_from_string(j.at("decided_by").get<std::string>());
  for (const auto& s : j.at("certificate")) {
    auto rule = rule_from_string(s.at("rule").get<std::string>());
    if (!rule) fail(ErrorKind::InvalidArgument, "unknown rule in certificate");
    v.certificate.push_back(CertStep{*rule, s.at("data")});
  }
  return v;
}

Json to_json(const GapSequence& gaps) {
  return {{"genus", gaps.genus}, {"gaps", gaps.gaps}, {"weight", gaps.weight}};
}

Json to_json(const QSeries& s) {
  Json terms = Json::array();
  for (const auto& [n, c] : s.terms()) {
    terms.push_back({{"exponent", rational_json(Rational(n, s.denom()))},
                     {"coefficient", big_rational_string(c)}});
  }
  return {{"N", s.level().value()},
          {"denom", s.denom()},
          {"truncation", rational_json(Rational(s.bound(), s.denom()))},
          {"terms", std::move(terms)}};
}

Json to_json(const CuspDivisor& div) {
  Json entries = Json::array();
  for (const auto& [c, m] : div.entries) entries.push_back({{"cusp", c.label()}, {"order", m}});
  Json poles = Json::object();
  for (const auto& [c, m] : div.pole_part()) poles[c.label()] = m;
  Json zeros = Json::object();
  for (const auto& [c, m] : div.zero_part()) zeros[c.label()] = m;
  return {{"N", div.level.value()},
          {"degree", div.degree()},
          {"entries", std::move(entries)},
          {"poles", std::move(poles)},
          {"zeros", std::move(zeros)}};
}

Json to_json(const X120Certificate& cert) {
  Json images = Json::object();
  for (const auto& [q, c] : cert.atkin_lehner_images) images["W_" + std::to_string(q)] = c.label();
  return {{"cusp", cert.cusp.label()},
          {"genus", cert.genus},
          {"pole_orders", cert.pole_orders},
          {"gaps", to_json(cert.gaps)},
          {"divisor_f", to_json(cert.divisor_f)},
          {"divisor_g", to_json(cert.divisor_g)},
          {"images", std::move(images)},
          {"irregular_cusps", ordered_cusps(cert.irregular_cusps)},
          {"verdict", to_json(cert.verdict)}};
}

Json to_json(const SurveyReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    Json row{{"N", r.level},
             {"d", r.d},
             {"reduced_d", r.reduced_d},
             {"e", r.e},
             {"status", std::string(to_string(r.verdict.status))},
             {"rule", r.verdict.decided_by ? std::string(to_string(*r.verdict.decided_by))
                                           : std::string("none")}};
    if (r.verdict.weight) row["weight"] = *r.verdict.weight;
    rows.push_back(std::move(row));
  }
  Json failures = Json::object();
  for (const auto& [d, levels] : report.cusp_ineq_failures)
    failures[std::to_string(d)] = std::vector<Int>(levels.begin(), levels.end());
  return {{"max", report.max_level},
          {"rows", std::move(rows)},
          {"cusp_inequality_failures", std::move(failures)},
          {"not_weierstrass", report.not_weierstrass_levels},
          {"unknown", report.unknown_levels}};
}

std::string survey_tsv(const SurveyReport& report) {
  std::ostringstream os;
  os << "N\td\treduced_d\te\tstatus\trule\tweight\n";
  for (const auto& r : report.rows) {
    os << r.level << '\t' << r.d << '\t' << r.reduced_d << '\t' << r.e << '\t'
       << to_string(r.verdict.status) << '\t'
       << (r.verdict.decided_by ? to_string(*r.verdict.decided_by) : "none") << '\t';
    if (r.verdict.weight) os << *r.verdict.weight;
    os << '\n';
  }
  return os.str();
}

}  // namespace cuspforge
