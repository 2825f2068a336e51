#include "cuspforge/symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "cuspforge/error.hpp"

namespace cuspforge {

DiamondOp::DiamondOp(const Level& level, Int a)
    : level_(level), a_(normalize_residue(a, level.value())), inverse_(0) {
  if (gcd(a_, level.value()) != 1 && level.value() != 1) {
    fail(ErrorKind::NonUnitGenerator, "[a] needs a unit, got " + std::to_string(a));
  }
  inverse_ = inverse_mod(a_, level.value());
}

bool AtkinLehnerOp::normalized() const noexcept {
  const Int n = level.value();
  const Int x = matrix.a / q;
  const Int y = matrix.b;
  return mod(x - 1, n / q) == 0 && mod(y - 1, q) == 0;
}

std::vector<Int> exact_divisors(Int n) {
  std::vector<Int> out;
  for (Int q : divisors(n))
    if (gcd(q, n / q) == 1) out.push_back(q);
  return out;
}

namespace {

void require_same_level(const Level& level, const CuspClass& c) {
  if (!(c.level == level)) {
    fail(ErrorKind::LevelMismatch, "operator at level " + std::to_string(level.value()) +
                                       " applied to cusp at level " +
                                       std::to_string(c.level.value()));
  }
}

void require_exact_divisor(const Level& level, Int q) {
  const Int n = level.value();
  if (q < 1 || n % q != 0 || gcd(q, n / q) != 1) {
    fail(ErrorKind::NotExactDivisor,
         std::to_string(q) + " is not an exact divisor of " + std::to_string(n));
  }
}

}  // namespace

CuspClass act_diamond(const DiamondOp& op, const CuspClass& c) {
  require_same_level(op.level(), c);
  return canonicalize(c.group, op.a() * c.x, op.inverse() * c.y);
}

AtkinLehnerOp build_atkin_lehner(const Level& level, Int q) {
  require_exact_divisor(level, q);
  const Int n = level.value();
  if (q == n) return make_atkin_lehner(level, q, Mat2{0, 1, -n, 0});
  // x = y = 1: solve Q w - (N/Q) z = 1 with the smallest nonnegative w.
  const Int co = n / q;
  auto eg = extended_gcd(q, co);
  Int w = mod(eg.s, co);
  Int z = (q * w - 1) / co;
  return make_atkin_lehner(level, q, Mat2{q, 1, n * z, q * w});
}

AtkinLehnerOp make_atkin_lehner(const Level& level, Int q, const Mat2& m) {
  require_exact_divisor(level, q);
  const Int n = level.value();
  if (m.a % q != 0 || m.c % n != 0 || m.d % q != 0 || m.det() != q) {
    fail(ErrorKind::InvalidArgument, "matrix is not of the form (Qx y; Nz Qw) with det Q");
  }
  return AtkinLehnerOp{level, q, m};
}

bool normalizes(const AtkinLehnerOp& op, const DeltaSubgroup& delta) {
  const Int n = op.level.value();
  for (Int a : delta.elements()) {
    // γ = (a⁻¹ b; N a) ∈ Γ_0(N) with lower-right entry a.
    const Int ainv = inverse_mod(a, n);
    const Mat2 gamma{ainv, (ainv * a - 1) / n, n, a};
    const Mat2 conj = op.matrix * gamma * op.matrix.adjugate();
    // conj = Q · (W γ W⁻¹); its upper-left entry over Q, mod N, must lie in Δ.
    if (!delta.contains(conj.a / op.q)) return false;
  }
  return true;
}

CuspClass act_atkin_lehner(const AtkinLehnerOp& op, const CuspClass& c) {
  require_same_level(op.level, c);
  switch (c.group.kind()) {
    case GroupKind::Gamma0:
      break;
    case GroupKind::Gamma1:
      if (!op.normalized()) {
        fail(ErrorKind::InvalidArgument,
             "W_Q matrix must satisfy x ≡ 1 mod N/Q, y ≡ 1 mod Q to act on X_1(N)");
      }
      break;
    case GroupKind::GammaDelta:
      if (!op.normalized() || !normalizes(op, c.group.delta())) {
        fail(ErrorKind::NotNormalizing,
             "W_" + std::to_string(op.q) + " does not normalize " + c.group.name());
      }
      break;
  }
  const auto lift = coprime_lift(c.x, c.y, c.level.value());
  return canonicalize(c.group, apply(op.matrix, lift));
}

CuspClass act_sp(Int p, const Level& level, const CuspClass& c) {
  if (p != 2 && p != 3) fail(ErrorKind::BadP, "S_p is only defined here for p = 2, 3");
  if (level.value() % (p * p) != 0) {
    fail(ErrorKind::LevelNotDivisible,
         std::to_string(p * p) + " does not divide " + std::to_string(level.value()));
  }
  require_same_level(level, c);
  if (c.group.kind() != GroupKind::Gamma0) {
    fail(ErrorKind::InvalidArgument, "S_p acts on X_0(N) cusps");
  }
  // p·S_p = (p 1; 0 p) acts as a/c ↦ (pa + c)/(pc).
  const auto lift = coprime_lift(c.x, c.y, level.value());
  return canonicalize(c.group, apply(Mat2{p, 1, 0, p}, lift));
}

std::vector<CuspClass> fixed_cusps(const DiamondOp& op, const GroupTag& group) {
  if (!(group.level() == op.level())) {
    fail(ErrorKind::LevelMismatch, "diamond operator and group at different levels");
  }
  std::vector<CuspClass> out;
  for (const auto& entry : atlas(group).entries) {
    if (act_diamond(op, entry.cusp) == entry.cusp) out.push_back(entry.cusp);
  }
  return out;
}

std::size_t CuspOrbits::orbit_of(const CuspClass& c) const {
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (std::find(orbits[i].begin(), orbits[i].end(), c) != orbits[i].end()) return i;
  }
  fail(ErrorKind::InvalidArgument, "cusp " + c.label() + " not in any orbit");
}

CuspOrbits cusp_orbits(const GroupTag& group) {
  if (group.kind() == GroupKind::GammaDelta) {
    fail(ErrorKind::InvalidArgument, "orbits are offered for Gamma0 and Gamma1 only");
  }
  const Level& level = group.level();
  const Int n = level.value();
  const auto cusps = atlas(group).cusps();

  std::vector<std::size_t> parent(cusps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  auto index = [&](const CuspClass& c) {
    auto it = std::find(cusps.begin(), cusps.end(), c);
    if (it == cusps.end()) fail(ErrorKind::InvariantViolation, "image cusp outside atlas");
    return static_cast<std::size_t>(it - cusps.begin());
  };
  auto merge = [&](std::size_t i, std::size_t j) { parent[find(i)] = find(j); };

  CuspOrbits out{group, {}, {}, group.kind() == GroupKind::Gamma1 && n == 4};
  if (group.kind() == GroupKind::Gamma1) {
    for (Int a : unit_group_generators(level)) {
      DiamondOp op(level, a);
      out.generators.push_back("[" + std::to_string(a) + "]");
      for (std::size_t i = 0; i < cusps.size(); ++i) merge(i, index(act_diamond(op, cusps[i])));
    }
  }
  for (Int q : exact_divisors(n)) {
    if (q == 1) continue;
    auto op = build_atkin_lehner(level, q);
    out.generators.push_back("W_" + std::to_string(q));
    for (std::size_t i = 0; i < cusps.size(); ++i) merge(i, index(act_atkin_lehner(op, cusps[i])));
  }

  std::vector<std::vector<CuspClass>> grouped(cusps.size());
  for (std::size_t i = 0; i < cusps.size(); ++i) grouped[find(i)].push_back(cusps[i]);
  for (auto& g : grouped) {
    if (g.empty()) continue;
    std::sort(g.begin(), g.end(), atlas_order);
    out.orbits.push_back(std::move(g));
  }
  std::sort(out.orbits.begin(), out.orbits.end(),
            [](const auto& l, const auto& r) { return atlas_order(l.front(), r.front()); });
  return out;
}

CuspOrbits cusp_orbits_x1(const Level& level) {
  return cusp_orbits(GroupTag::gamma1(level));
}

}  // namespace cuspforge
