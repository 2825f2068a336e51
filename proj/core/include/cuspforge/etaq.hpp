#pragma once

// Generalized Dedekind eta functions E_r on X_1(N): exact q-expansions,
// orders at cusps, divisors, and the X_1(20) gap-sequence certificate.

#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cuspforge/cusps.hpp"
#include "cuspforge/gaps.hpp"
#include "cuspforge/qseries.hpp"
#include "cuspforge/verdict.hpp"

namespace cuspforge {

/// x² - x + 1/6.
Rational bernoulli2(const Rational& x);

/// bernoulli2 of the fractional part of x.
Rational periodic_bernoulli2(const Rational& x);

/// Leading exponent of E_r as a numerator over 12N: 6r² - 6rN + N².
Int eta_leading_numerator(const Level& level, Int r);

/// Number of integral powers of q kept beyond the leading term by default.
Int default_terms(const Level& level);

/// q-expansion of E_r with `terms` integral powers of q beyond the leading
/// one. r outside 1..N-1 uses E_{r+N} = E_{-r} = -E_r. Throws
/// RCongruentZero when N | r.
QSeries eta_series(const Level& level, Int r, Int terms);

/// ∏ E_r^{n_r}. Keys are normalized into 1..⌊N/2⌋ using E_{N-r} = E_r.
class EtaQuotient {
 public:
  EtaQuotient(const Level& level, const std::map<Int, Int>& exponents);

  /// {"level": N, "exponents": {"r": n_r, ...}}
  static EtaQuotient from_json(const nlohmann::json& spec);
  nlohmann::ordered_json to_json() const;

  const Level& level() const noexcept { return level_; }
  const std::map<Int, Int>& exponents() const noexcept { return exponents_; }

  /// The quotient ∏ E_{rx}^{n_r}, i.e. the expansion at the ∞-type cusp (x : N).
  EtaQuotient twisted(Int x) const;

 private:
  Level level_;
  std::map<Int, Int> exponents_;
};

QSeries quotient_series(const EtaQuotient& q, Int terms);

/// The congruences Σ n_r ≡ 0 (12), Σ r n_r ≡ 0 (2), Σ r² n_r ≡ 0 (2N) that
/// make a quotient a modular function on Γ_1(N).
bool passes_modularity_screen(const EtaQuotient& q);

/// Order at an X_1(N) cusp a/c in the local parameter q^{1/h}:
/// h · gcd(c,N)² · Σ n_r B̃(a r / gcd(c,N)) / (2N). Not necessarily integral
/// for quotients that are not modular functions.
Rational order_at_cusp_exact(const EtaQuotient& q, const CuspClass& c);

/// Integral order; throws NonIntegralOrder otherwise.
Int ord_at_cusp(const EtaQuotient& q, const CuspClass& c);

struct CuspDivisor {
  Level level;
  std::vector<std::pair<CuspClass, Int>> entries;  // atlas order, zero orders kept

  Int degree() const;
  Int order_at(const CuspClass& c) const;
  std::vector<std::pair<CuspClass, Int>> pole_part() const;  // positive multiplicities
  std::vector<std::pair<CuspClass, Int>> zero_part() const;
};

/// Orders over the whole X_1(N) atlas. Throws NonIntegralOrder or
/// NonzeroDegree when the quotient is not a modular function.
CuspDivisor divisor(const EtaQuotient& q);

/// The functions f and g at level 20 with poles only at (1:10).
EtaQuotient x1_20_function_f();
EtaQuotient x1_20_function_g();

struct X120Certificate {
  CuspClass cusp;
  CuspDivisor divisor_f;
  CuspDivisor divisor_g;
  std::vector<Int> pole_orders;
  Int genus;
  GapSequence gaps;
  std::vector<std::pair<Int, CuspClass>> atkin_lehner_images;  // (Q, W_Q s)
  std::vector<CuspClass> irregular_cusps;
  Verdict verdict;
};

/// Recomputes the divisors of f and g, cross-checks their orders at the
/// ∞-type cusps against the q-series, derives the gap sequence at (1:10)
/// and spreads the verdict to the other irregular cusps with W_4, W_5, W_20.
/// `terms` <= 0 selects default_terms.
X120Certificate certify_x1_20(Int terms = 0);

}  // namespace cuspforge
