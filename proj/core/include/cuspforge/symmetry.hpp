#pragma once

// Automorphisms acting on cusps: diamond operators [a], Atkin-Lehner
// matrices W_Q, and the scaled translation S_p on X_0(p²M).

#include <string>
#include <vector>

#include "cuspforge/cusps.hpp"

namespace cuspforge {

class DiamondOp {
 public:
  DiamondOp(const Level& level, Int a);

  const Level& level() const noexcept { return level_; }
  Int a() const noexcept { return a_; }
  Int inverse() const noexcept { return inverse_; }

 private:
  Level level_;
  Int a_;
  Int inverse_;
};

/// W_Q as a matrix (Qx y; Nz Qw) of determinant Q, Q an exact divisor of N.
struct AtkinLehnerOp {
  Level level;
  Int q;
  Mat2 matrix;

  /// x ≡ 1 (mod N/Q) and y ≡ 1 (mod Q). Only normalized matrices give a
  /// well-defined action on X_1(N) classes; on X_0(N) any matrix will do.
  bool normalized() const noexcept;
};

/// Exact divisors Q of N, i.e. gcd(Q, N/Q) = 1, in increasing order.
std::vector<Int> exact_divisors(Int n);

CuspClass act_diamond(const DiamondOp& op, const CuspClass& c);

/// Normalized W_Q from the extended-gcd solution of Q·w - (N/Q)·z = 1 with
/// x = y = 1 (for Q = N the Fricke shape (0 1; -N 0)).
AtkinLehnerOp build_atkin_lehner(const Level& level, Int q);

/// Validates an explicit matrix of W_Q shape. Throws NotExactDivisor or
/// InvalidArgument.
AtkinLehnerOp make_atkin_lehner(const Level& level, Int q, const Mat2& m);

/// Does W_Q normalize Γ_Δ(N)? Checked by conjugating [a] for a ∈ Δ.
bool normalizes(const AtkinLehnerOp& op, const DeltaSubgroup& delta);

CuspClass act_atkin_lehner(const AtkinLehnerOp& op, const CuspClass& c);

/// S_p = (1 1/p; 0 1) acting on an X_0(N) cusp, p ∈ {2, 3}, p² | N.
CuspClass act_sp(Int p, const Level& level, const CuspClass& c);

std::vector<CuspClass> fixed_cusps(const DiamondOp& op, const GroupTag& group);

struct CuspOrbits {
  GroupTag group;
  std::vector<std::vector<CuspClass>> orbits;  // each sorted in atlas order
  std::vector<std::string> generators;         // e.g. "[3]", "W_4"
  bool possibly_incomplete = false;            // N = 4 on X_1

  /// Index of the orbit containing c.
  std::size_t orbit_of(const CuspClass& c) const;
};

/// Orbits of the atlas under all [a] and all W_Q. Offered for Gamma1 and
/// Gamma0 only, since W_Q need not normalize a general Γ_Δ(N).
CuspOrbits cusp_orbits(const GroupTag& group);
CuspOrbits cusp_orbits_x1(const Level& level);

}  // namespace cuspforge
