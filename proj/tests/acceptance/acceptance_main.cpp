// Acceptance gate: one PASS/FAIL line per criterion, each with its own time
// budget. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cuspforge/criteria.hpp"
#include "cuspforge/error.hpp"
#include "cuspforge/etaq.hpp"
#include "cuspforge/genus.hpp"
#include "cuspforge/symmetry.hpp"
#include "oracles.hpp"

using namespace cuspforge;

namespace {

// Collects failures; the first few are printed.
struct Check {
  std::ostringstream notes;
  bool ok = true;
  int failures = 0;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures < 5) notes << (failures ? "; " : "") << what;
    else if (failures == 5) notes << "; ...";
    ++failures;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<void(Check&)> body;
};

std::set<oracle::Int> to_oracle(const DeltaSubgroup& d) {
  std::set<oracle::Int> out;
  for (Int a : d.elements()) out.insert(oracle::mod(a, d.level().value()));
  return out;
}

void genus_spot_checks(Check& c) {
  c.expect(g1(Level(20)) == 3, "g1(20) != 3");
  c.expect(g0(Level(8)) == 0, "g0(8) != 0");
  c.expect(g0(Level(16)) == 0, "g0(16) != 0");
  c.expect(g1(Level(11)) == 1, "g1(11) != 1");
  c.expect(g1(Level(13)) >= 2, "g1(13) < 2");
  for (Int n = 1; n <= 100; ++n) {
    const auto want = oracle::coset_counts_gamma1(n);
    c.expect(want.integral() && g1(Level(n)) == want.genus(), "g1 mismatch at N=" + std::to_string(n));
  }
}

void cusp_counts(Check& c) {
  for (Int n = 5; n <= 200; ++n) {
    const Level level(n);
    auto by_d1 = oracle::cusp_counts_by_d(n, oracle::closure(n, {}));
    auto by_d0 = oracle::cusp_counts_by_d(n, to_oracle(all_units(level)));
    const auto at1 = atlas(GroupTag::gamma1(level));
    const auto at0 = atlas(GroupTag::gamma0(level));
    for (Int d : divisors(n)) {
      const Int e = irregularity_index(level, d);
      const Int closed1 = totient(d) * totient(n / d) / 2;
      const Int closed0 = totient(e);
      const std::string where = " at N=" + std::to_string(n) + ", d=" + std::to_string(d);
      c.expect(by_d1[d] == closed1, "X_1 brute force vs closed form" + where);
      c.expect(by_d0[d] == closed0, "X_0 brute force vs closed form" + where);
      c.expect(at1.count_with_d(d) == closed1, "X_1 atlas" + where);
      c.expect(at0.count_with_d(d) == closed0, "X_0 atlas" + where);
    }
  }
}

void theorem_reproduction(Check& c) {
  const auto report = survey_x1(300);
  std::set<Int> covered;
  for (const auto& row : report.rows) {
    covered.insert(row.level);
    const Status want = row.level == 18 ? Status::NotWeierstrass : Status::Weierstrass;
    c.expect(row.verdict.status == want,
             "N=" + std::to_string(row.level) + ", d=" + std::to_string(row.d) + " got " +
                 std::string(to_string(row.verdict.status)));
  }
  for (Int n = 1; n <= 300; ++n) {
    const bool in_scope = g1(Level(n)) >= 2 && !is_square_free(n);
    c.expect(in_scope == (covered.count(n) == 1), "survey coverage at N=" + std::to_string(n));
  }
  c.expect(report.not_weierstrass_levels == std::vector<Int>{18}, "NotWeierstrass levels != {18}");
  c.expect(report.unknown_levels.empty(), "Unknown verdicts present");
  const std::map<Int, std::set<Int>> lists{
      {2, {16, 20, 24, 28, 32, 36, 40, 44, 48, 60}}, {3, {18, 36}}, {4, {16, 32, 48}}, {6, {36, 72}}};
  for (const auto& [d, want] : lists) {
    c.expect(report.cusp_ineq_failures.at(d) == want, "cusp inequality failures differ for d=" + std::to_string(d));
  }
}

void nu_inf_inequality(Check& c) {
  for (Int n = 1; n <= 300; ++n) {
    const Level level(n);
    const Rational base = nu_inf(level, plus_minus_one(level));
    for (Int d : divisors(n)) {
      const Int e = irregularity_index(level, d);
      if (e == 1) continue;
      const Rational lhs = Rational(e) * nu_inf(level, delta_d(level, d)) - base;
      const Rational rhs = Rational((e - 1) * totient(d) * totient(n / d), 2);
      c.expect(lhs >= rhs, "violation at N=" + std::to_string(n) + ", d=" + std::to_string(d));
    }
  }
}

void mu_identity(Check& c) {
  for (Int n = 1; n <= 300; ++n) {
    const Level level(n);
    const Rational base = mu(level, plus_minus_one(level));
    for (Int d : divisors(n)) {
      const Int e = irregularity_index(level, d);
      if (e == 1) continue;
      c.expect(base == Rational(e) * mu(level, delta_d(level, d)),
               "violation at N=" + std::to_string(n) + ", d=" + std::to_string(d));
    }
  }
}

void eta_certificate(Check& c) {
  const auto cert = certify_x1_20();
  const auto s = canonicalize_x1(Level(20), 1, 10);
  auto exactly = [&](const CuspDivisor& div, Int order) {
    const auto poles = div.pole_part();
    return div.degree() == 0 && poles.size() == 1 && poles[0].first == s && poles[0].second == order;
  };
  c.expect(exactly(cert.divisor_f, 3), "div(f) pole part is not 3·(1:10)");
  c.expect(exactly(cert.divisor_g, 4), "div(g) pole part is not 4·(1:10)");
  c.expect(cert.gaps.gaps == std::vector<Int>{1, 2, 5}, "gap sequence != {1,2,5}");
  c.expect(cert.gaps.weight == 2, "weight != 2");
  std::map<Int, std::string> images;
  for (const auto& [q, img] : cert.atkin_lehner_images) images[q] = img.label();
  c.expect(images == std::map<Int, std::string>{{4, "3:10"}, {5, "1:6"}, {20, "1:2"}}, "W_Q images differ");
  const auto orbits = cusp_orbits_x1(Level(20));
  const auto& orbit = orbits.orbits[orbits.orbit_of(s)];
  c.expect(orbit.size() == 4 && cert.irregular_cusps.size() == 4, "irregular cusps are not one orbit of size 4");
  for (const auto& cusp : orbit) c.expect(cusp.irregular, "orbit of (1:10) contains a regular cusp");
}

void x0_classification(Check& c) {
  c.expect(x0_verdict(2, 16).status == Status::Weierstrass, "(2,16) not Weierstrass");
  c.expect(x0_verdict(3, 9).status == Status::NotWeierstrass, "(3,9) not NotWeierstrass");
  c.expect(x0_verdict(2, 11).status == Status::NotWeierstrass, "(2,11) not NotWeierstrass");
  c.expect(x0_verdict(2, 77).status == Status::Unknown, "(2,77) not Unknown");
  c.expect(x0_verdict(3, 10).status == Status::Unknown, "(3,10) not Unknown");
  for (Int p : {2, 3, 5, 7}) {
    for (Int m = p; p * p * m <= 1500; m += p) {
      if (g0(Level(p * p * m)) < 2) continue;
      const auto v = x0_verdict(p, m);
      const auto& first = v.certificate.front();
      c.expect(first.rule == Rule::LemmaGenus && recheck(first), "missing genus step");
      if (holds(first))
        c.expect(v.status == Status::Weierstrass,
                 "genus criterion overridden at p=" + std::to_string(p) + ", M=" + std::to_string(m));
    }
  }
}

void total_ramification(Check& c) {
  for (Int n = 1; n <= 150; ++n) {
    const Level level(n);
    for (Int d : divisors(n)) {
      if (irregularity_index(level, d) == 1) continue;
      c.expect(ramification_x1_to_delta(level, d) == 1,
               "X_1 -> X_Delta at N=" + std::to_string(n) + ", d=" + std::to_string(d));
    }
  }
  for (Int p : {2, 3, 5}) {
    for (Int m = p; p * p * m <= 400; m += p) {
      for (Int x = 1; x < p; ++x) {
        c.expect(ramification_x0_tower(p, m, x) == 1,
                 "X_0 tower at p=" + std::to_string(p) + ", M=" + std::to_string(m));
      }
    }
  }
}

void orbit_constancy(Check& c) {
  for (Int n = 1; n <= 100; ++n) {
    const Level level(n);
    if (g1(level) < 2) continue;  // verdicts are only defined from genus 2 on
    const auto orbits = cusp_orbits_x1(level);
    for (const auto& orbit : orbits.orbits) {
      const Status s = cusp_verdict_x1(orbit.front()).status;
      for (const auto& cusp : orbit)
        c.expect(cusp_verdict_x1(cusp).status == s, "N=" + std::to_string(n) + " orbit of " + orbit.front().label());
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "genus spot checks and brute-force g1 for N <= 100", 1.0, genus_spot_checks},
      {2, "cusp counts by brute force for 5 <= N <= 200", 30.0, cusp_counts},
      {3, "irregular cusps of X_1(N) for N <= 300 and cusp-inequality failure lists", 120.0,
       theorem_reproduction},
      {4, "nu_inf inequality for N <= 300", 60.0, nu_inf_inequality},
      {5, "mu identity for N <= 300", 10.0, mu_identity},
      {6, "X_1(20) eta certificate", 5.0, eta_certificate},
      {7, "X_0(p^2 M) classification checks", 1.0, x0_classification},
      {8, "total ramification", 30.0, total_ramification},
      {9, "verdicts constant on symmetry orbits for N <= 100", 60.0, orbit_constancy},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= cr.budget_s) check.expect(false, "over time budget");
    std::printf("%s %d: %s (%.3f s, budget %.0f s)%s%s\n", check.ok ? "PASS" : "FAIL", cr.id, cr.name,
                secs, cr.budget_s, check.ok ? "" : " -- ", check.notes.str().c_str());
    if (!check.ok) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
