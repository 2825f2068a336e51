#include "cuspforge/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "cuspforge/error.hpp"

namespace cuspforge {

namespace {

Int sat_add(Int a, Int b) noexcept { return std::min(a + b, QSeries::kExact); }

void require_same_level(const QSeries& a, const QSeries& b) {
  if (!(a.level() == b.level())) fail(ErrorKind::LevelMismatch, "q-series at different levels");
}

// Lower bound on the valuation: the leading numerator, or the bound if no
// term is known.
Int valuation_floor(const QSeries& s) { return s.is_zero() ? s.bound() : s.leading_numerator(); }

}  // namespace

QSeries::QSeries(const Level& level, Int bound) : level_(level), bound_(bound) {}

QSeries QSeries::one(const Level& level) { return monomial(level, 0, 1, kExact); }

QSeries QSeries::monomial(const Level& level, Int numerator, BigRational coeff, Int bound) {
  QSeries s(level, bound);
  s.add_term(numerator, coeff);
  return s;
}

Int QSeries::leading_numerator() const {
  if (terms_.empty()) {
    fail(ErrorKind::TruncationTooSmall, "series has no nonzero term below its truncation bound");
  }
  return terms_.begin()->first;
}

Rational QSeries::leading_exponent() const { return Rational(leading_numerator(), denom()); }

const BigRational& QSeries::leading_coefficient() const {
  leading_numerator();
  return terms_.begin()->second;
}

BigRational QSeries::coefficient(Int numerator) const {
  if (numerator >= bound_) {
    fail(ErrorKind::TruncationTooSmall, "coefficient requested beyond the truncation bound");
  }
  auto it = terms_.find(numerator);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void QSeries::add_term(Int numerator, const BigRational& c) {
  if (numerator >= bound_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(numerator, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QSeries QSeries::truncated(Int bound) const {
  QSeries out(level_, std::min(bound, bound_));
  for (const auto& [n, c] : terms_) {
    if (n >= out.bound_) break;
    out.terms_.emplace(n, c);
  }
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  require_same_level(a, b);
  const Int bound =
      std::min(sat_add(a.bound_, valuation_floor(b)), sat_add(b.bound_, valuation_floor(a)));
  QSeries out(a.level_, bound);
  for (const auto& [na, ca] : a.terms_) {
    for (const auto& [nb, cb] : b.terms_) {
      if (na + nb >= bound) break;
      out.add_term(na + nb, ca * cb);
    }
  }
  return out;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  require_same_level(a, b);
  QSeries out(a.level_, std::min(a.bound_, b.bound_));
  for (const auto& [n, c] : a.terms_) out.add_term(n, c);
  for (const auto& [n, c] : b.terms_) out.add_term(n, c);
  return out;
}

QSeries QSeries::inverse() const {
  const Int lead = leading_numerator();
  const BigRational c0 = terms_.begin()->second;
  const Int precision = bound_ >= kExact ? kExact : bound_ - lead;

  // Offsets of the known terms relative to the leading one; the inverse only
  // has exponents in -lead + (their additive span), so step by their gcd.
  std::vector<std::pair<Int, BigRational>> tail;
  Int step = 0;
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    tail.emplace_back(it->first - lead, it->second);
    step = std::gcd(step, it->first - lead);
  }
  QSeries out(level_, precision >= kExact ? kExact : -lead + precision);
  if (tail.empty()) {
    out.add_term(-lead, 1 / c0);
    return out;
  }
  if (precision >= kExact) {
    fail(ErrorKind::TruncationTooSmall, "inverse of an exact multi-term series needs a truncation");
  }
  const std::size_t count = static_cast<std::size_t>((precision + step - 1) / step);
  std::vector<BigRational> inv(count);
  inv[0] = 1 / c0;
  for (std::size_t k = 1; k < count; ++k) {
    BigRational acc = 0;
    const Int t = static_cast<Int>(k) * step;
    for (const auto& [s, a] : tail) {
      if (s > t) break;
      const auto& prev = inv[static_cast<std::size_t>((t - s) / step)];
      if (prev != 0) acc += a * prev;
    }
    inv[k] = -acc / c0;
  }
  for (std::size_t k = 0; k < count; ++k) out.add_term(-lead + static_cast<Int>(k) * step, inv[k]);
  return out;
}

QSeries QSeries::pow(Int k) const {
  if (k < 0) return inverse().pow(-k);
  QSeries result = one(level_);
  QSeries base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool agree(const QSeries& a, const QSeries& b) {
  if (!(a.level() == b.level())) return false;
  const Int bound = std::min(a.bound_, b.bound_);
  return a.truncated(bound).terms_ == b.truncated(bound).terms_;
}

std::string QSeries::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& [n, c] : terms_) {
    if (shown == max_terms) {
      os << " + ...";
      break;
    }
    if (shown++) os << " + ";
    os << "(" << c << ")q^(" << cuspforge::to_string(Rational(n, denom())) << ")";
  }
  if (shown == 0) os << "0";
  if (bound_ < kExact) os << " + O(q^(" << cuspforge::to_string(Rational(bound_, denom())) << "))";
  return os.str();
}

}  // namespace cuspforge
