#include "cuspforge/genus.hpp"

#include "cuspforge/error.hpp"

namespace cuspforge {

namespace {

void require_level(const Level& level, const DeltaSubgroup& delta) {
  if (!(delta.level() == level)) {
    fail(ErrorKind::LevelMismatch, "subgroup is not at level " + std::to_string(level.value()));
  }
}

Rational coset_factor(const Level& level, const DeltaSubgroup& delta) {
  return Rational(totient(level.value()), delta.size());
}

template <typename Pred>
Rational elliptic_count(const Level& level, const DeltaSubgroup& delta, Pred pred) {
  require_level(level, delta);
  Int hits = 0;
  for (Int b : delta.elements())
    if (pred(b)) ++hits;
  return hits * coset_factor(level, delta);
}

}  // namespace

Rational mu(const Level& level, const DeltaSubgroup& delta) {
  require_level(level, delta);
  Rational out(level.value());
  for (Int p : prime_factors(level.value())) out *= Rational(p + 1, p);
  return out * coset_factor(level, delta);
}

Rational nu2(const Level& level, const DeltaSubgroup& delta) {
  const Int n = level.value();
  return elliptic_count(level, delta, [n](Int b) { return mod(b * b + 1, n) == 0; });
}

Rational nu3(const Level& level, const DeltaSubgroup& delta) {
  const Int n = level.value();
  return elliptic_count(level, delta, [n](Int b) { return mod(b * b - b + 1, n) == 0; });
}

Rational nu_inf(const Level& level, const DeltaSubgroup& delta) {
  require_level(level, delta);
  const Int n = level.value();
  Rational out(0);
  for (Int d : divisors(n)) {
    out += Rational(totient(d) * totient(n / d), projection_image_size(level, d, delta));
  }
  return out;
}

GenusProfile genus_delta(const Level& level, const DeltaSubgroup& delta) {
  GenusProfile p{level, delta, mu(level, delta), nu2(level, delta), nu3(level, delta),
                 nu_inf(level, delta), 0};
  const Rational g = 1 + p.mu / 12 - p.nu2 / 4 - p.nu3 / 3 - p.nu_inf / 2;
  if (g.denominator() != 1 || g < 0) {
    fail(ErrorKind::NonIntegralGenus, "genus formula gave " + to_string(g) + " at level " +
                                          std::to_string(level.value()) + ", Δ = " +
                                          delta.to_string());
  }
  p.g = g.numerator();
  return p;
}

Int g0(const Level& level) { return genus_delta(level, all_units(level)).g; }

Int g1(const Level& level) { return genus_delta(level, plus_minus_one(level)).g; }

}  // namespace cuspforge
