#pragma once

// Exact modular arithmetic, divisor utilities and subgroups Δ of (Z/NZ)*.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace cuspforge {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// The level N of a modular curve. Always N >= 1.
class Level {
 public:
  explicit Level(Int n);

  Int value() const noexcept { return n_; }
  friend bool operator==(const Level&, const Level&) = default;

 private:
  Int n_;
};

Int gcd(Int a, Int b) noexcept;
Int lcm(Int a, Int b) noexcept;

/// Least nonnegative residue of a modulo m (m > 0).
Int mod(Int a, Int m) noexcept;

/// Residue of a in the normalized range 1..m, so 0 is stored as m.
Int normalize_residue(Int a, Int m) noexcept;

struct ExtendedGcd {
  Int g;  // gcd(a, b) >= 0
  Int s;  // s*a + t*b = g
  Int t;
};
ExtendedGcd extended_gcd(Int a, Int b) noexcept;

/// Inverse of a modulo m, normalized to 1..m. Throws NonUnitGenerator when
/// gcd(a, m) != 1.
Int inverse_mod(Int a, Int m);

Int totient(Int n);
std::vector<Int> divisors(Int n);
std::vector<Int> prime_factors(Int n);
bool is_prime(Int n) noexcept;
bool is_square_free(Int n);

/// Throws NotADivisor unless d is a positive divisor of level.
void require_divisor(const Level& level, Int d);

/// gcd(d, N/d) for a divisor d of N.
Int irregularity_index(const Level& level, Int d);

/// All a in 1..N with gcd(a, N) = 1. For N = 1 this is [1].
std::vector<Int> units(const Level& level);

/// A subgroup Δ of (Z/NZ)* that contains -1. Elements are sorted and
/// normalized to 1..N.
class DeltaSubgroup {
 public:
  const Level& level() const noexcept { return level_; }
  std::span<const Int> elements() const noexcept { return elements_; }
  Int size() const noexcept { return static_cast<Int>(elements_.size()); }
  bool contains(Int a) const;
  bool is_subgroup_of(const DeltaSubgroup& other) const;
  std::string to_string() const;

  friend bool operator==(const DeltaSubgroup&, const DeltaSubgroup&) = default;

 private:
  DeltaSubgroup(Level level, std::vector<Int> elements);

  friend DeltaSubgroup subgroup_generated(const Level&, std::span<const Int>);

  Level level_;
  std::vector<Int> elements_;
};

/// Smallest multiplicatively closed set containing gens together with ±1.
DeltaSubgroup subgroup_generated(const Level& level, std::span<const Int> gens);
DeltaSubgroup subgroup_generated(const Level& level, std::initializer_list<Int> gens);

/// ⟨±1⟩, the subgroup giving X_1(N).
DeltaSubgroup plus_minus_one(const Level& level);

/// The full unit group, giving X_0(N).
DeltaSubgroup all_units(const Level& level);

/// Units congruent to ±1 modulo N/e where e = gcd(d, N/d).
DeltaSubgroup delta_d(const Level& level, Int d);

/// |π_d(Δ)|: size of the image of Δ in (Z/lcm(d, N/d)Z)*.
Int projection_image_size(const Level& level, Int d, const DeltaSubgroup& delta);

/// A small generating set for (Z/NZ)*, found greedily.
std::vector<Int> unit_group_generators(const Level& level);

std::string to_string(const Rational& r);

}  // namespace cuspforge
