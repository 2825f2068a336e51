#include "cuspforge/arith.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cuspforge/error.hpp"

namespace cuspforge {

Level::Level(Int n) : n_(n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "level must be >= 1, got " + std::to_string(n));
}

Int gcd(Int a, Int b) noexcept { return std::gcd(a, b); }

Int lcm(Int a, Int b) noexcept { return std::lcm(a, b); }

Int mod(Int a, Int m) noexcept {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int normalize_residue(Int a, Int m) noexcept {
  Int r = mod(a, m);
  return r == 0 ? m : r;
}

ExtendedGcd extended_gcd(Int a, Int b) noexcept {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Int inverse_mod(Int a, Int m) {
  if (m == 1) return 1;
  auto eg = extended_gcd(mod(a, m), m);
  if (eg.g != 1) {
    fail(ErrorKind::NonUnitGenerator,
         std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  return normalize_residue(eg.s, m);
}

Int totient(Int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "totient of non-positive integer");
  Int result = n;
  for (Int p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<Int> divisors(Int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "divisors of non-positive integer");
  std::vector<Int> small, large;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i != n / i) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> ps;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool is_prime(Int n) noexcept {
  if (n < 2) return false;
  for (Int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_square_free(Int n) {
  for (Int p : prime_factors(n))
    if (n % (p * p) == 0) return false;
  return true;
}

void require_divisor(const Level& level, Int d) {
  if (d < 1 || level.value() % d != 0) {
    fail(ErrorKind::NotADivisor,
         std::to_string(d) + " does not divide " + std::to_string(level.value()));
  }
}

Int irregularity_index(const Level& level, Int d) {
  require_divisor(level, d);
  return gcd(d, level.value() / d);
}

std::vector<Int> units(const Level& level) {
  const Int n = level.value();
  if (n == 1) return {1};
  std::vector<Int> out;
  for (Int a = 1; a < n; ++a)
    if (gcd(a, n) == 1) out.push_back(a);
  return out;
}

DeltaSubgroup::DeltaSubgroup(Level level, std::vector<Int> elements)
    : level_(level), elements_(std::move(elements)) {}

bool DeltaSubgroup::contains(Int a) const {
  return std::binary_search(elements_.begin(), elements_.end(),
                            normalize_residue(a, level_.value()));
}

bool DeltaSubgroup::is_subgroup_of(const DeltaSubgroup& other) const {
  if (!(level_ == other.level_)) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

std::string DeltaSubgroup::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) os << ',';
    os << elements_[i];
  }
  os << '}';
  return os.str();
}

DeltaSubgroup subgroup_generated(const Level& level, std::span<const Int> gens) {
  const Int n = level.value();
  std::set<Int> members{normalize_residue(1, n), normalize_residue(-1, n)};
  for (Int g : gens) {
    if (gcd(mod(g, n), n) != 1 && n != 1) {
      fail(ErrorKind::NonUnitGenerator,
           std::to_string(g) + " shares a factor with " + std::to_string(n));
    }
    members.insert(normalize_residue(g, n));
  }
  // The group is abelian, so adjoining g to H gives the union of the cosets
  // H·g^i for i below the order of g modulo H.
  std::vector<char> in_group(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Int> group{normalize_residue(1, n)};
  in_group[static_cast<std::size_t>(group[0])] = 1;
  for (Int g : members) {
    if (in_group[static_cast<std::size_t>(g)]) continue;
    const std::vector<Int> base = group;
    for (Int power = g; !in_group[static_cast<std::size_t>(power)];
         power = normalize_residue(power * g, n)) {
      for (Int h : base) {
        const Int x = normalize_residue(h * power, n);
        in_group[static_cast<std::size_t>(x)] = 1;
        group.push_back(x);
      }
    }
  }
  std::sort(group.begin(), group.end());
  return DeltaSubgroup(level, std::move(group));
}

DeltaSubgroup subgroup_generated(const Level& level, std::initializer_list<Int> gens) {
  return subgroup_generated(level, std::span<const Int>(gens.begin(), gens.size()));
}

DeltaSubgroup plus_minus_one(const Level& level) {
  return subgroup_generated(level, std::span<const Int>{});
}

DeltaSubgroup all_units(const Level& level) {
  auto u = units(level);
  return subgroup_generated(level, u);
}

DeltaSubgroup delta_d(const Level& level, Int d) {
  const Int e = irregularity_index(level, d);
  const Int modulus = level.value() / e;
  std::vector<Int> gens;
  for (Int a : units(level)) {
    if (mod(a - 1, modulus) == 0 || mod(a + 1, modulus) == 0) gens.push_back(a);
  }
  return subgroup_generated(level, gens);
}

Int projection_image_size(const Level& level, Int d, const DeltaSubgroup& delta) {
  require_divisor(level, d);
  if (!(delta.level() == level)) {
    fail(ErrorKind::LevelMismatch, "subgroup level differs from requested level");
  }
  const Int modulus = lcm(d, level.value() / d);
  std::set<Int> image;
  for (Int a : delta.elements()) image.insert(mod(a, modulus));
  return static_cast<Int>(image.size());
}

std::vector<Int> unit_group_generators(const Level& level) {
  std::vector<Int> gens;
  const Int order = static_cast<Int>(units(level).size());
  auto current = plus_minus_one(level);
  for (Int a : units(level)) {
    if (current.size() == order) break;
    if (current.contains(a)) continue;
    gens.push_back(a);
    current = subgroup_generated(level, gens);
  }
  return gens;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace cuspforge
