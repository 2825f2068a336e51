#include "cuspforge/matrix.hpp"

#include "cuspforge/error.hpp"

namespace cuspforge {

namespace {

ProjectivePoint reduce(Int a, Int c) {
  Int g = gcd(a, c);
  if (g == 0) fail(ErrorKind::InvariantViolation, "degenerate projective point (0, 0)");
  a /= g;
  c /= g;
  if (c < 0 || (c == 0 && a < 0)) {
    a = -a;
    c = -c;
  }
  return {a, c};
}

}  // namespace

ProjectivePoint apply(const Mat2& m, ProjectivePoint p) {
  return reduce(m.a * p.a + m.b * p.c, m.c * p.a + m.d * p.c);
}

ProjectivePoint coprime_lift(Int x, Int y, Int n) {
  const Int c = normalize_residue(y, n);
  const Int a0 = mod(x, n);
  if (gcd(gcd(a0, c), n) != 1) {
    fail(ErrorKind::NotPrimitive, "pair (" + std::to_string(x) + ", " + std::to_string(y) +
                                      ") is not primitive modulo " + std::to_string(n));
  }
  // Some a0 + kN with 0 <= k < c is prime to c.
  for (Int k = 0; k <= c; ++k) {
    Int a = a0 + k * n;
    if (gcd(a, c) == 1) return {a, c};
  }
  fail(ErrorKind::InvariantViolation, "coprime lift search exhausted");
}

Mat2 completion(ProjectivePoint p) {
  auto eg = extended_gcd(p.a, p.c);
  if (eg.g != 1) fail(ErrorKind::NotPrimitive, "column is not primitive");
  // a*s + c*t = 1  =>  (a  -t; c  s) has determinant 1.
  return {p.a, -eg.t, p.c, eg.s};
}

}  // namespace cuspforge
