#pragma once

// Genus of X_Δ(N) from the index, elliptic-point and cusp counts.

#include "cuspforge/arith.hpp"

namespace cuspforge {

struct GenusProfile {
  Level level;
  DeltaSubgroup delta;
  Rational mu;
  Rational nu2;
  Rational nu3;
  Rational nu_inf;
  Int g;
};

/// N · ∏_{p|N} (1 + 1/p) · φ(N)/|Δ|.
Rational mu(const Level& level, const DeltaSubgroup& delta);

/// #{b ∈ Δ : b² + 1 ≡ 0 mod N} · φ(N)/|Δ|.
Rational nu2(const Level& level, const DeltaSubgroup& delta);

/// #{b ∈ Δ : b² - b + 1 ≡ 0 mod N} · φ(N)/|Δ|.
Rational nu3(const Level& level, const DeltaSubgroup& delta);

/// Σ_{d|N} φ(d)φ(N/d) / |π_d(Δ)|.
Rational nu_inf(const Level& level, const DeltaSubgroup& delta);

/// Throws NonIntegralGenus if 1 + μ/12 - ν₂/4 - ν₃/3 - ν∞/2 is not a
/// nonnegative integer.
GenusProfile genus_delta(const Level& level, const DeltaSubgroup& delta);

Int g0(const Level& level);
Int g1(const Level& level);

}  // namespace cuspforge
