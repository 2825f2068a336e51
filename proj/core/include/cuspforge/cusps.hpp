#pragma once

// Cusps of X_0(N), X_1(N) and X_Δ(N): canonical representatives, atlases,
// widths and ramification in the coverings used by the verdict engine.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cuspforge/arith.hpp"
#include "cuspforge/matrix.hpp"

namespace cuspforge {

enum class GroupKind { Gamma0, Gamma1, GammaDelta };

/// Which congruence subgroup a cusp belongs to. Every tag carries the
/// effective Δ: all units for Gamma0 and ⟨±1⟩ for Gamma1.
class GroupTag {
 public:
  static GroupTag gamma0(const Level& level);
  static GroupTag gamma1(const Level& level);
  static GroupTag gamma_delta(DeltaSubgroup delta);

  GroupKind kind() const noexcept { return kind_; }
  const Level& level() const noexcept { return delta_->level(); }
  const DeltaSubgroup& delta() const noexcept { return *delta_; }
  std::string name() const;

  friend bool operator==(const GroupTag& x, const GroupTag& y);

 private:
  GroupTag(GroupKind kind, std::shared_ptr<const DeltaSubgroup> delta)
      : kind_(kind), delta_(std::move(delta)) {}

  GroupKind kind_;
  std::shared_ptr<const DeltaSubgroup> delta_;
};

/// A cusp ±(x : y) in canonical form for its group. d = gcd(y, N),
/// e = gcd(d, N/d); the cusp is irregular iff e > 1.
///
/// x lies in 1..d and y in 1..N. For Gamma1 the sign is chosen to minimize
/// (y, x); for Gamma0 y = d and x is the least positive lift of the class
/// modulo e that is prime to d; for GammaDelta the representative is the
/// (y, x)-least Gamma1 class in the Δ-orbit.
struct CuspClass {
  Level level;
  Int x;
  Int y;
  GroupTag group;
  Int d;
  Int e;
  bool irregular;

  std::string label() const;  // "x:y"

  friend bool operator==(const CuspClass& l, const CuspClass& r) {
    return l.level == r.level && l.x == r.x && l.y == r.y && l.group == r.group;
  }
};

/// Atlas order: by d, then y, then x.
bool atlas_order(const CuspClass& l, const CuspClass& r) noexcept;

CuspClass canonicalize_x1(const Level& level, Int x, Int y);
CuspClass canonicalize_x0(const Level& level, Int x, Int d);
CuspClass canonicalize(const GroupTag& group, Int x, Int y);
CuspClass canonicalize(const GroupTag& group, ProjectivePoint p);

/// Γ_1(N) equivalence test: (x', y') ≡ ±(x + j y, y) mod N for some j.
bool equivalent_x1(const Level& level, Int x, Int y, Int x2, Int y2);

struct AtlasEntry {
  CuspClass cusp;
  Int x1_fiber = 1;  // number of X_1(N) cusps above this one
};

struct CuspAtlas {
  GroupTag group;
  std::vector<AtlasEntry> entries;

  Int size() const noexcept { return static_cast<Int>(entries.size()); }
  Int count_with_d(Int d) const;
  std::vector<CuspClass> cusps() const;
  std::optional<std::size_t> index_of(const CuspClass& c) const;
};

CuspAtlas atlas(const GroupTag& group);

struct CuspWidth {
  Int width;
  bool plus_sign;  // σ T^h σ⁻¹ lies in Γ itself, not only in -Γ
};

/// Least h > 0 with σ T^h σ⁻¹ ∈ ±Γ, found by exact matrix conjugation.
CuspWidth width_and_stabilizer_sign(const CuspClass& c);

/// Largest orbit size of an X_1(N) cusp with invariant d under the diamond
/// operators in Δ_d (1 means total ramification in X_1(N) → X_{Δ_d}(N)).
Int ramification_x1_to_delta(const Level& level, Int d);

/// Number of distinct Γ_0(p²M) classes among the images of x/p under the
/// coset representatives τ/(kpMτ + 1), k = 0..p-1.
Int ramification_x0_tower(Int p, Int m, Int x);

}  // namespace cuspforge
