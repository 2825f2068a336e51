#pragma once

// Sufficient criteria for cusps to be Weierstrass points and the verdict
// engines for X_1(N) and X_0(p²M).

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cuspforge/cusps.hpp"
#include "cuspforge/gaps.hpp"
#include "cuspforge/verdict.hpp"

namespace cuspforge {

/// g - m·ḡ ≥ m for a point totally ramified in a degree-m cover of a genus-ḡ
/// curve. Throws BadGenus if g < 2.
bool schoeneberg(Int g, Int m, Int g_bar);

/// An automorphism with more than 4 fixed points fixes only Weierstrass points.
bool lewittes(Int fixed_point_count);

/// φ(d)φ(N/d) ≥ 8 + 4/(e-1), compared exactly. Throws NotIrregular if e = 1.
bool lemma_cusp_inequality(const Level& level, Int d);

/// g_1(N) - e·g_{Δ_d}(N) ≥ e. Throws NotIrregular, GenusTooSmall.
bool lemma_genus_check(const Level& level, Int d);

/// d if φ(d) ≤ φ(N/d), else N/d.
Int fricke_reduce(const Level& level, Int d);

/// The exact divisor Q with W_Q sending cusps of invariant d to cusps of
/// invariant gcd(d, N/d).
Int atkin_lehner_reducer(const Level& level, Int d);

/// gcd(d, N/d), the smallest invariant in the W_Q-orbit of d.
Int atkin_lehner_reduce(const Level& level, Int d);

/// Status of the irregular cusps of X_1(N) with invariant d.
/// Throws NotADivisor, NotIrregular, GenusTooSmall.
Verdict x1_verdict(const Level& level, Int d);

/// Per-cusp wrapper: regular cusps are outside the engine and get Unknown.
Verdict cusp_verdict_x1(const CuspClass& c);

/// Status of the irregular cusps equivalent to (1:p) on X_0(p²M).
/// Throws NotPrime, InvalidArgument, GenusTooSmall.
Verdict x0_verdict(Int p, Int m);

struct SurveyRow {
  Int level;
  Int d;          // after fricke_reduce
  Int reduced_d;  // after the Atkin-Lehner reduction
  Int e;
  bool cusp_inequality;
  Verdict verdict;
};

struct SurveyReport {
  Int max_level;
  std::vector<SurveyRow> rows;                    // sorted by (N, d)
  std::map<Int, std::set<Int>> cusp_ineq_failures;  // keyed by d ∈ {2,3,4,6}
  std::vector<Int> not_weierstrass_levels;
  std::vector<Int> unknown_levels;
};

inline constexpr std::array<Int, 4> kTrackedInvariants{2, 3, 4, 6};

/// All N ≤ max_level with g_1(N) ≥ 2 and every irregular d fixed by
/// fricke_reduce. jobs ≤ 0 uses the hardware concurrency. Output does not
/// depend on jobs.
SurveyReport survey_x1(Int max_level, int jobs = 0);

}  // namespace cuspforge
