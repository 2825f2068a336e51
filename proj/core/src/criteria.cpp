#include "cuspforge/criteria.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "cuspforge/error.hpp"
#include "cuspforge/etaq.hpp"
#include "cuspforge/genus.hpp"

namespace cuspforge {

namespace {

Int require_irregular(const Level& level, Int d) {
  require_divisor(level, d);
  const Int e = irregularity_index(level, d);
  if (e == 1) {
    fail(ErrorKind::NotIrregular, "cusps with d = " + std::to_string(d) + " at N = " +
                                      std::to_string(level.value()) + " are regular (e = 1)");
  }
  return e;
}

Int require_g1_at_least_two(const Level& level) {
  const Int g = g1(level);
  if (g < 2) {
    fail(ErrorKind::GenusTooSmall,
         "g_1(" + std::to_string(level.value()) + ") = " + std::to_string(g) + " < 2");
  }
  return g;
}

Rational cusp_ineq_rhs(Int e) { return Rational(8) + Rational(4, e - 1); }

CertStep cusp_ineq_step(const Level& level, Int d) {
  const Int n = level.value();
  const Int e = irregularity_index(level, d);
  return inequality_step(Rule::LemmaCuspIneq, {{"N", n}, {"d", d}, {"e", e}},
                         Rational(totient(d) * totient(n / d)), Relation::GreaterEqual,
                         cusp_ineq_rhs(e));
}

CertStep genus_step(const Level& level, Int d) {
  const Int e = irregularity_index(level, d);
  const Int g = g1(level);
  const Int gd = genus_delta(level, delta_d(level, d)).g;
  return inequality_step(Rule::LemmaGenus,
                         {{"N", level.value()}, {"d", d}, {"e", e}, {"g1", g}, {"g_delta", gd}},
                         Rational(g - e * gd), Relation::GreaterEqual, Rational(e));
}

struct FactEntry {
  Int level;
  Status status;
  const char* source;
};

// Hyperelliptic levels whose Weierstrass points are known explicitly.
constexpr FactEntry kFactTable[] = {
    {16, Status::Weierstrass,
     "Weierstrass points of the hyperelliptic curve X_1(16): all irregular cusps"},
    {18, Status::NotWeierstrass,
     "Weierstrass points of the hyperelliptic curve X_1(18): none are cusps"},
};

const X120Certificate& x1_20_certificate() {
  static const X120Certificate cert = certify_x1_20();
  return cert;
}

Verdict decide(Verdict v, Status s, Rule r) {
  v.status = s;
  v.decided_by = r;
  return v;
}

}  // namespace

bool schoeneberg(Int g, Int m, Int g_bar) {
  if (g < 2) fail(ErrorKind::BadGenus, "genus must be at least 2, got " + std::to_string(g));
  if (m < 2) fail(ErrorKind::InvalidArgument, "cover degree must be at least 2");
  if (g_bar < 0) fail(ErrorKind::InvalidArgument, "quotient genus must be nonnegative");
  return g - m * g_bar >= m;
}

bool lewittes(Int fixed_point_count) {
  if (fixed_point_count < 0) fail(ErrorKind::InvalidArgument, "negative fixed-point count");
  return fixed_point_count > 4;
}

bool lemma_cusp_inequality(const Level& level, Int d) {
  const Int e = require_irregular(level, d);
  return Rational(totient(d) * totient(level.value() / d)) >= cusp_ineq_rhs(e);
}

bool lemma_genus_check(const Level& level, Int d) {
  require_irregular(level, d);
  require_g1_at_least_two(level);
  return holds(genus_step(level, d));
}

Int fricke_reduce(const Level& level, Int d) {
  require_divisor(level, d);
  const Int other = level.value() / d;
  return totient(d) <= totient(other) ? d : other;
}

Int atkin_lehner_reducer(const Level& level, Int d) {
  require_divisor(level, d);
  Int q = 1;
  Int rest = level.value();
  for (Int p : prime_factors(level.value())) {
    Int k = 0, pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
      ++k;
    }
    Int a = 0;
    for (Int t = d; t % p == 0; t /= p) ++a;
    if (2 * a > k) q *= pk;
  }
  return q;
}

Int atkin_lehner_reduce(const Level& level, Int d) {
  require_divisor(level, d);
  return irregularity_index(level, d);
}

Verdict x1_verdict(const Level& level, Int d) {
  const Int n = level.value();
  const Int e = require_irregular(level, d);
  require_g1_at_least_two(level);

  Verdict v;
  const Int fd = fricke_reduce(level, d);
  const Int q = atkin_lehner_reducer(level, fd);
  v.certificate.push_back(CertStep{Rule::FrickeDualityReduction,
                                   {{"N", n},
                                    {"d", d},
                                    {"fricke_d", fd},
                                    {"atkin_lehner_q", q},
                                    {"reduced_d", e},
                                    {"phi_d", totient(d)},
                                    {"phi_N_over_d", totient(n / d)}}});

  CertStep ineq = cusp_ineq_step(level, e);
  const bool ineq_holds = holds(ineq);
  v.certificate.push_back(std::move(ineq));
  if (ineq_holds) return decide(std::move(v), Status::Weierstrass, Rule::LemmaCuspIneq);

  CertStep gstep = genus_step(level, e);
  const bool genus_holds = holds(gstep);
  v.certificate.push_back(std::move(gstep));
  if (genus_holds) return decide(std::move(v), Status::Weierstrass, Rule::LemmaGenus);

  for (const auto& fact : kFactTable) {
    if (fact.level != n) continue;
    v.certificate.push_back(CertStep{Rule::FactTable,
                                     {{"N", n},
                                      {"status", std::string(to_string(fact.status))},
                                      {"source", fact.source}}});
    return decide(std::move(v), fact.status, Rule::FactTable);
  }

  if (n == 20) {
    const auto& cert = x1_20_certificate();
    for (const auto& step : cert.verdict.certificate) v.certificate.push_back(step);
    v.weight = cert.verdict.weight;
    return decide(std::move(v), cert.verdict.status, Rule::EtaCertificate);
  }

  fail(ErrorKind::InvariantViolation,
       "no rule decides X_1(" + std::to_string(n) + "), d = " + std::to_string(d));
}

Verdict cusp_verdict_x1(const CuspClass& c) {
  if (c.group.kind() != GroupKind::Gamma1) {
    fail(ErrorKind::InvalidArgument, "expected an X_1(N) cusp");
  }
  if (!c.irregular) return Verdict{};
  return x1_verdict(c.level, c.d);
}

namespace {

// Number of prime factors with multiplicity, and the distinct ones.
std::vector<Int> factor_with_multiplicity(Int m) {
  std::vector<Int> out;
  for (Int p : prime_factors(m)) {
    for (Int t = m; t % p == 0; t /= p) out.push_back(p);
  }
  return out;
}

bool is_odd_prime(Int q) { return q > 2 && is_prime(q); }

}  // namespace

Verdict x0_verdict(Int p, Int m) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) fail(ErrorKind::InvalidArgument, "M must be positive");
  const Level level(p * p * m);
  const Int n = level.value();
  const Int g = g0(level);
  if (g < 2) {
    fail(ErrorKind::GenusTooSmall,
         "g_0(" + std::to_string(n) + ") = " + std::to_string(g) + " < 2");
  }

  Verdict v;
  nlohmann::ordered_json ctx{{"p", p}, {"M", m}, {"N", n}};

  if (m % p == 0) {
    const Int g_cover = g0(Level(p * m));
    auto step = inequality_step(Rule::LemmaGenus, ctx, Rational(g - p * g_cover),
                                Relation::GreaterEqual, Rational(p));
    step.data["cover"] = {{"g0_N", g}, {"g0_pM", g_cover}};
    const bool lemma = holds(step);
    v.certificate.push_back(std::move(step));

    const bool atkin81 = n == 81;
    bool ogg = false;
    for (Int k : {8, 16})
      if (n % k == 0 && is_odd_prime(n / k)) ogg = true;
    const Status classified =
        (atkin81 || ogg) ? Status::NotWeierstrass : Status::Weierstrass;
    if (lemma) {
      if (classified != Status::Weierstrass) {
        fail(ErrorKind::InvariantViolation,
             "genus criterion and classification disagree at N = " + std::to_string(n));
      }
      return decide(std::move(v), Status::Weierstrass, Rule::LemmaGenus);
    }
    const Rule rule = ogg ? Rule::OggClassification : Rule::AtkinClassification;
    auto data = ctx;
    data["excluded"] = "N = 81, 8q, 16q (q an odd prime)";
    data["status"] = std::string(to_string(classified));
    v.certificate.push_back(CertStep{rule, std::move(data)});
    return decide(std::move(v), classified, rule);
  }

  const auto fac = factor_with_multiplicity(m);
  auto data = ctx;
  if (p == 2) {
    // M odd here.
    const bool single = fac.size() == 1 && fac[0] != 3;
    const bool three_q = fac.size() == 2 && fac[0] == 3 && fac[1] != 3;
    if (single || three_q) {
      data["case"] = single ? "M = q" : "M = 3q";
      data["status"] = "NotWeierstrass";
      v.certificate.push_back(CertStep{Rule::OggClassification, std::move(data)});
      return decide(std::move(v), Status::NotWeierstrass, Rule::OggClassification);
    }
    const bool open = fac.size() == 2 && fac[0] != fac[1] && fac[0] != 3 && fac[1] != 3 &&
                      (fac[0] % 4 == 3 || fac[1] % 4 == 3);
    if (open) {
      data["case"] = "M = qq' with q' = 3 mod 4";
      data["status"] = "Unknown";
      v.certificate.push_back(CertStep{Rule::LehnerNewmanClassification, std::move(data)});
      return v;
    }
    data["status"] = "Weierstrass";
    v.certificate.push_back(CertStep{Rule::LehnerNewmanClassification, std::move(data)});
    return decide(std::move(v), Status::Weierstrass, Rule::LehnerNewmanClassification);
  }

  if (p == 3) {
    const bool prime_m = fac.size() == 1;
    const bool open_pair = fac.size() == 2 && fac[0] != fac[1] &&
                           (fac[0] % 3 == 2 || fac[1] % 3 == 2);
    if (prime_m || open_pair) {
      data["case"] = prime_m ? "M = q" : "M = qq' with q' = 2 mod 3";
      data["status"] = "Unknown";
      v.certificate.push_back(CertStep{Rule::AtkinClassification, std::move(data)});
      return v;
    }
    data["status"] = "Weierstrass";
    v.certificate.push_back(CertStep{Rule::AtkinClassification, std::move(data)});
    return decide(std::move(v), Status::Weierstrass, Rule::AtkinClassification);
  }

  // p ≥ 5 with p ∤ M: no classification available.
  data["reason"] = "OutOfScope";
  data["status"] = "Unknown";
  v.certificate.push_back(CertStep{Rule::AtkinClassification, std::move(data)});
  return v;
}

namespace {

std::vector<SurveyRow> survey_level(Int n) {
  const Level level(n);
  std::vector<SurveyRow> rows;
  if (g1(level) < 2) return rows;
  for (Int d : divisors(n)) {
    const Int e = irregularity_index(level, d);
    if (e == 1 || fricke_reduce(level, d) != d) continue;
    rows.push_back(SurveyRow{n, d, atkin_lehner_reduce(level, d), e,
                             lemma_cusp_inequality(level, e), x1_verdict(level, d)});
  }
  return rows;
}

}  // namespace

SurveyReport survey_x1(Int max_level, int jobs) {
  if (max_level < 13) {
    fail(ErrorKind::InvalidArgument, "survey needs max >= 13, got " + std::to_string(max_level));
  }
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = static_cast<int>(std::min<Int>(jobs, max_level));

  // Make the shared certificate before fanning out.
  x1_20_certificate();

  std::vector<std::vector<SurveyRow>> per_level(static_cast<std::size_t>(max_level + 1));
  std::atomic<Int> next{1};
  std::mutex err_mu;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (Int n = next++; n <= max_level; n = next++) {
      try {
        per_level[static_cast<std::size_t>(n)] = survey_level(n);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);

  SurveyReport report{max_level, {}, {}, {}, {}};
  for (Int d : kTrackedInvariants) report.cusp_ineq_failures[d];
  for (auto& rows : per_level) {
    for (auto& row : rows) {
      if (!row.cusp_inequality &&
          std::ranges::find(kTrackedInvariants, row.reduced_d) != kTrackedInvariants.end()) {
        report.cusp_ineq_failures[row.reduced_d].insert(row.level);
      }
      auto add_level = [&](std::vector<Int>& v) {
        if (v.empty() || v.back() != row.level) v.push_back(row.level);
      };
      if (row.verdict.status == Status::NotWeierstrass) add_level(report.not_weierstrass_levels);
      if (row.verdict.status == Status::Unknown) add_level(report.unknown_levels);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace cuspforge
