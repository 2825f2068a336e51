#include "cuspforge/cusps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "cuspforge/error.hpp"

namespace cuspforge {

GroupTag GroupTag::gamma0(const Level& level) {
  return GroupTag(GroupKind::Gamma0, std::make_shared<const DeltaSubgroup>(all_units(level)));
}

GroupTag GroupTag::gamma1(const Level& level) {
  return GroupTag(GroupKind::Gamma1,
                  std::make_shared<const DeltaSubgroup>(plus_minus_one(level)));
}

GroupTag GroupTag::gamma_delta(DeltaSubgroup delta) {
  return GroupTag(GroupKind::GammaDelta,
                  std::make_shared<const DeltaSubgroup>(std::move(delta)));
}

std::string GroupTag::name() const {
  switch (kind_) {
    case GroupKind::Gamma0: return "Gamma0";
    case GroupKind::Gamma1: return "Gamma1";
    case GroupKind::GammaDelta: return "GammaDelta" + delta_->to_string();
  }
  return "?";
}

bool operator==(const GroupTag& x, const GroupTag& y) {
  if (x.kind_ != y.kind_) return false;
  if (x.kind_ != GroupKind::GammaDelta) return x.level() == y.level();
  return x.delta_ == y.delta_ || *x.delta_ == *y.delta_;
}

std::string CuspClass::label() const {
  return std::to_string(x) + ":" + std::to_string(y);
}

bool atlas_order(const CuspClass& l, const CuspClass& r) noexcept {
  return std::tie(l.d, l.y, l.x) < std::tie(r.d, r.y, r.x);
}

namespace {

struct RawPair {
  Int x;
  Int y;
  auto operator<=>(const RawPair&) const = default;
};

// Canonical Γ_1(N) pair, (y, x)-minimal over the sign.
RawPair canonical_x1_pair(Int n, Int x, Int y) {
  const Int yy = normalize_residue(y, n);
  const Int d = gcd(yy, n);
  if (gcd(x, d) != 1) {
    fail(ErrorKind::NotPrimitive, "gcd(x, y, N) > 1 for (" + std::to_string(x) + ", " +
                                      std::to_string(y) + ") at level " + std::to_string(n));
  }
  RawPair plus{normalize_residue(x, d), yy};
  RawPair minus{normalize_residue(-x, d), normalize_residue(-y, n)};
  auto key = [](const RawPair& p) { return std::pair(p.y, p.x); };
  return key(minus) < key(plus) ? minus : plus;
}

CuspClass make_cusp(const GroupTag& group, Int x, Int y) {
  const Int n = group.level().value();
  const Int d = gcd(y, n);
  const Int e = gcd(d, n / d);
  return CuspClass{group.level(), x, y, group, d, e, e > 1};
}

RawPair canonical_delta_pair(const DeltaSubgroup& delta, Int x, Int y) {
  const Int n = delta.level().value();
  RawPair best = canonical_x1_pair(n, x, y);
  for (Int a : delta.elements()) {
    RawPair img = canonical_x1_pair(n, a * x, inverse_mod(a, n) * y);
    if (std::pair(img.y, img.x) < std::pair(best.y, best.x)) best = img;
  }
  return best;
}

RawPair canonical_x0_pair(Int n, Int x, Int y) {
  const Int yy = normalize_residue(y, n);
  const Int d = gcd(yy, n);
  if (gcd(x, d) != 1) {
    fail(ErrorKind::NotPrimitive, "gcd(x, y, N) > 1 for (" + std::to_string(x) + ", " +
                                      std::to_string(y) + ") at level " + std::to_string(n));
  }
  const Int e = gcd(d, n / d);
  // Class invariant x·(y/d) mod e; the smallest positive lift prime to d.
  Int cls = normalize_residue(mod(x, n) * (yy / d), e);
  for (Int cand = cls;; cand += e) {
    if (gcd(cand, d) == 1) return {cand, d};
  }
}

}  // namespace

CuspClass canonicalize_x1(const Level& level, Int x, Int y) {
  auto p = canonical_x1_pair(level.value(), x, y);
  return make_cusp(GroupTag::gamma1(level), p.x, p.y);
}

CuspClass canonicalize_x0(const Level& level, Int x, Int d) {
  require_divisor(level, d);
  if (gcd(x, d) != 1) {
    fail(ErrorKind::NotCoprime,
         "x = " + std::to_string(x) + " is not prime to d = " + std::to_string(d));
  }
  auto p = canonical_x0_pair(level.value(), x, d);
  return make_cusp(GroupTag::gamma0(level), p.x, p.y);
}

CuspClass canonicalize(const GroupTag& group, Int x, Int y) {
  const Int n = group.level().value();
  RawPair p{};
  switch (group.kind()) {
    case GroupKind::Gamma1: p = canonical_x1_pair(n, x, y); break;
    case GroupKind::Gamma0: p = canonical_x0_pair(n, x, y); break;
    case GroupKind::GammaDelta: p = canonical_delta_pair(group.delta(), x, y); break;
  }
  return make_cusp(group, p.x, p.y);
}

CuspClass canonicalize(const GroupTag& group, ProjectivePoint p) {
  return canonicalize(group, p.a, p.c);
}

bool equivalent_x1(const Level& level, Int x, Int y, Int x2, Int y2) {
  const Int n = level.value();
  for (Int sign : {1, -1}) {
    if (mod(sign * y2 - y, n) != 0) continue;
    for (Int j = 0; j < n; ++j) {
      if (mod(sign * x2 - (x + j * y), n) == 0) return true;
    }
  }
  return false;
}

Int CuspAtlas::count_with_d(Int d) const {
  return std::count_if(entries.begin(), entries.end(),
                       [d](const AtlasEntry& e) { return e.cusp.d == d; });
}

std::vector<CuspClass> CuspAtlas::cusps() const {
  std::vector<CuspClass> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.cusp);
  return out;
}

std::optional<std::size_t> CuspAtlas::index_of(const CuspClass& c) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].cusp == c) return i;
  return std::nullopt;
}

namespace {

std::vector<RawPair> x1_classes(Int n) {
  std::set<std::tuple<Int, Int, Int>> seen;  // (d, y, x)
  for (Int d : divisors(n)) {
    const Int co = n / d;
    for (Int u = 1; u <= co; ++u) {
      if (gcd(u, co) != 1) continue;
      for (Int x = 1; x <= d; ++x) {
        if (gcd(x, d) != 1) continue;
        auto p = canonical_x1_pair(n, x, d * u);
        seen.emplace(d, p.y, p.x);
      }
    }
  }
  std::vector<RawPair> out;
  for (auto [d, y, x] : seen) out.push_back({x, y});
  return out;
}

}  // namespace

CuspAtlas atlas(const GroupTag& group) {
  const Level& level = group.level();
  const Int n = level.value();
  CuspAtlas out{group, {}};
  switch (group.kind()) {
    case GroupKind::Gamma1:
      for (auto p : x1_classes(n)) out.entries.push_back({make_cusp(group, p.x, p.y), 1});
      break;
    case GroupKind::Gamma0:
      for (Int d : divisors(n)) {
        const Int e = gcd(d, n / d);
        for (Int r = 1; r <= e; ++r) {
          if (gcd(r, e) != 1) continue;
          Int x = r;
          while (gcd(x, d) != 1) x += e;
          auto p = canonical_x0_pair(n, x, d);
          out.entries.push_back({make_cusp(group, p.x, p.y), 0});
        }
      }
      // The X_1 fiber over a Γ_0 cusp is φ(d)φ(N/d)/(2φ(e)) generically;
      // count it directly instead.
      {
        std::map<std::pair<Int, Int>, Int> fiber;
        for (auto p : x1_classes(n)) {
          auto q = canonical_x0_pair(n, p.x, p.y);
          ++fiber[{q.y, q.x}];
        }
        for (auto& e : out.entries) e.x1_fiber = fiber[{e.cusp.y, e.cusp.x}];
      }
      break;
    case GroupKind::GammaDelta: {
      std::map<std::pair<Int, Int>, Int> fiber;
      for (auto p : x1_classes(n)) {
        auto q = canonical_delta_pair(group.delta(), p.x, p.y);
        ++fiber[{q.y, q.x}];
      }
      for (auto [key, count] : fiber) {
        out.entries.push_back({make_cusp(group, key.second, key.first), count});
      }
      break;
    }
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const AtlasEntry& l, const AtlasEntry& r) { return atlas_order(l.cusp, r.cusp); });
  return out;
}

CuspWidth width_and_stabilizer_sign(const CuspClass& c) {
  const Int n = c.level.value();
  const Mat2 sigma = completion(coprime_lift(c.x, c.y, n));
  const Mat2 sigma_inv = sigma.adjugate();
  const DeltaSubgroup& delta = c.group.delta();
  for (Int h = 1; h <= n; ++h) {
    const Mat2 conj = sigma * Mat2{1, h, 0, 1} * sigma_inv;
    if (mod(conj.c, n) != 0) continue;
    // -1 ∈ Δ, so membership in Γ_Δ already accounts for ±.
    if (!delta.contains(conj.a)) continue;
    bool plus = c.group.kind() == GroupKind::Gamma1 ? mod(conj.a - 1, n) == 0 : true;
    return {h, plus};
  }
  fail(ErrorKind::InvariantViolation, "no cusp width found up to N for " + c.label());
}

Int ramification_x1_to_delta(const Level& level, Int d) {
  const Int n = level.value();
  const Int e = irregularity_index(level, d);
  if (e == 1) {
    fail(ErrorKind::NotIrregular, "d = " + std::to_string(d) + " gives regular cusps at level " +
                                      std::to_string(n));
  }
  const DeltaSubgroup delta = delta_d(level, d);
  Int largest = 0;
  for (auto p : x1_classes(n)) {
    if (gcd(p.y, n) != d) continue;
    std::set<RawPair> orbit;
    for (Int a : delta.elements()) {
      orbit.insert(canonical_x1_pair(n, a * p.x, inverse_mod(a, n) * p.y));
    }
    largest = std::max<Int>(largest, static_cast<Int>(orbit.size()));
  }
  return largest;
}

Int ramification_x0_tower(Int p, Int m, Int x) {
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) fail(ErrorKind::InvalidArgument, "M must be positive");
  if (m % p != 0) {
    fail(ErrorKind::PNotDividingM,
         std::to_string(p) + " does not divide M = " + std::to_string(m));
  }
  if (gcd(x, p) != 1) {
    fail(ErrorKind::NotCoprime, "x = " + std::to_string(x) + " is not prime to p");
  }
  const Level level(p * p * m);
  const GroupTag g0 = GroupTag::gamma0(level);
  std::set<std::pair<Int, Int>> classes;
  for (Int k = 0; k < p; ++k) {
    const Mat2 rep{1, 0, k * p * m, 1};
    auto img = canonicalize(g0, apply(rep, ProjectivePoint{x, p}));
    classes.emplace(img.x, img.y);
  }
  return static_cast<Int>(classes.size());
}

}  // namespace cuspforge
