#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cuspforge/arith.hpp"

namespace cuspforge {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A truncated formal series Σ c_n q^{n/(12N)} with exact rational
/// coefficients. Terms are known exactly for numerators n < bound(); nothing
/// is known at or beyond the bound. Zero coefficients are never stored.
class QSeries {
 public:
  /// Bound used for series that are exact (no truncation).
  static constexpr Int kExact = Int{1} << 60;

  /// The zero series, known below `bound`.
  QSeries(const Level& level, Int bound);

  static QSeries one(const Level& level);
  static QSeries monomial(const Level& level, Int numerator, BigRational coeff, Int bound);

  const Level& level() const noexcept { return level_; }
  Int denom() const noexcept { return 12 * level_.value(); }
  Int bound() const noexcept { return bound_; }
  const std::map<Int, BigRational>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  Int leading_numerator() const;  // throws TruncationTooSmall when zero
  Rational leading_exponent() const;
  const BigRational& leading_coefficient() const;
  BigRational coefficient(Int numerator) const;

  /// Adds c·q^{numerator/denom}; ignored at or beyond the bound.
  void add_term(Int numerator, const BigRational& c);

  QSeries truncated(Int bound) const;
  QSeries inverse() const;
  QSeries pow(Int k) const;

  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator+(const QSeries& a, const QSeries& b);

  /// Equal on the range where both are known.
  friend bool agree(const QSeries& a, const QSeries& b);

  std::string to_string(std::size_t max_terms = 12) const;

 private:
  Level level_;
  Int bound_;
  std::map<Int, BigRational> terms_;
};

}  // namespace cuspforge
