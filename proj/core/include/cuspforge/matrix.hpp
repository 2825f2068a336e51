#pragma once

#include <utility>

#include "cuspforge/arith.hpp"

namespace cuspforge {

/// Integer 2x2 matrix (a b; c d).
struct Mat2 {
  Int a = 1, b = 0, c = 0, d = 1;

  Int det() const noexcept { return a * d - b * c; }
  /// Adjugate (d -b; -c a); equals det * inverse.
  Mat2 adjugate() const noexcept { return {d, -b, -c, a}; }
  Mat2 operator-() const noexcept { return {-a, -b, -c, -d}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) noexcept {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// A cusp a/c as a primitive integer column vector (gcd(a, c) = 1, c >= 0,
/// and a = 1 when c = 0).
struct ProjectivePoint {
  Int a;
  Int c;
};

/// Fractional-linear image of a/c under m, reduced to lowest terms.
ProjectivePoint apply(const Mat2& m, ProjectivePoint p);

/// Integers (a, c) with a ≡ x, c ≡ y (mod N), gcd(a, c) = 1 and 1 <= c <= N.
/// Requires gcd(x, y, N) = 1.
ProjectivePoint coprime_lift(Int x, Int y, Int n);

/// An element of SL2(Z) whose first column is (a, c).
Mat2 completion(ProjectivePoint p);

}  // namespace cuspforge
