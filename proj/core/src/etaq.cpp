#include "cuspforge/etaq.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "cuspforge/error.hpp"
#include "cuspforge/genus.hpp"
#include "cuspforge/symmetry.hpp"

namespace cuspforge {

Rational bernoulli2(const Rational& x) { return x * x - x + Rational(1, 6); }

Rational periodic_bernoulli2(const Rational& x) {
  // floor for rationals with positive denominator
  Int fl = x.numerator() / x.denominator();
  if (x.numerator() < 0 && x.numerator() % x.denominator() != 0) --fl;
  return bernoulli2(x - fl);
}

Int eta_leading_numerator(const Level& level, Int r) {
  const Int n = level.value();
  return 6 * r * r - 6 * r * n + n * n;
}

Int default_terms(const Level& level) { return 10 * level.value(); }

namespace {

// r ↦ (r0 in 1..N-1, sign) with E_r = sign · E_{r0}.
std::pair<Int, int> reduce_index(Int n, Int r) {
  if (mod(r, n) == 0) {
    fail(ErrorKind::RCongruentZero,
         "E_r needs r not divisible by N (r = " + std::to_string(r) + ", N = " +
             std::to_string(n) + ")");
  }
  const Int r0 = mod(r, n);
  const Int k = (r - r0) / n;  // E_{r0 + kN} = (-1)^k E_{r0}
  return {r0, (k % 2 == 0) ? 1 : -1};
}

Int canonical_key(Int n, Int r0) { return std::min(r0, n - r0); }

}  // namespace

QSeries eta_series(const Level& level, Int r, Int terms) {
  if (terms < 1) fail(ErrorKind::TruncationTooSmall, "truncation must be positive");
  const Int n = level.value();
  const auto [r0, sign] = reduce_index(n, r);
  const auto len = static_cast<std::size_t>(terms);

  // ∏_{m≥1} (1 - q^{(m-1)N + r0})(1 - q^{mN - r0}) as an integer polynomial
  // in q, known below q^terms.
  std::vector<BigInt> poly(len, 0);
  poly[0] = sign;
  auto times_one_minus = [&](Int k) {
    for (Int i = terms - 1; i >= k; --i) {
      poly[static_cast<std::size_t>(i)] -= poly[static_cast<std::size_t>(i - k)];
    }
  };
  for (Int m = 1;; ++m) {
    const Int lo = (m - 1) * n + r0;
    const Int hi = m * n - r0;
    if (lo >= terms && hi >= terms) break;
    if (lo < terms) times_one_minus(lo);
    if (hi < terms) times_one_minus(hi);
  }

  const Int lead = eta_leading_numerator(level, r0);
  const Int step = 12 * n;
  QSeries out(level, lead + terms * step);
  for (std::size_t i = 0; i < len; ++i) {
    if (poly[i] != 0) out.add_term(lead + static_cast<Int>(i) * step, BigRational(poly[i]));
  }
  return out;
}

EtaQuotient::EtaQuotient(const Level& level, const std::map<Int, Int>& exponents)
    : level_(level) {
  const Int n = level.value();
  for (auto [r, e] : exponents) {
    if (mod(r, n) == 0) {
      fail(ErrorKind::RCongruentZero, "exponent key r = " + std::to_string(r) +
                                          " is divisible by N = " + std::to_string(n));
    }
    if (r < 1 || r >= n) {
      fail(ErrorKind::InvalidArgument,
           "exponent keys must lie in 1..N-1, got " + std::to_string(r));
    }
    exponents_[canonical_key(n, r)] += e;
  }
  std::erase_if(exponents_, [](const auto& kv) { return kv.second == 0; });
}

EtaQuotient EtaQuotient::from_json(const nlohmann::json& spec) {
  if (!spec.is_object() || !spec.contains("level") || !spec.contains("exponents")) {
    fail(ErrorKind::InvalidArgument, "quotient spec needs \"level\" and \"exponents\"");
  }
  const Level level(spec.at("level").get<Int>());
  std::map<Int, Int> exps;
  for (const auto& [key, value] : spec.at("exponents").items()) {
    Int r = 0;
    try {
      std::size_t used = 0;
      r = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "exponent key \"" + key + "\" is not an integer");
    }
    if (!value.is_number_integer()) {
      fail(ErrorKind::InvalidArgument, "exponent for r = " + key + " is not an integer");
    }
    exps[r] += value.get<Int>();
  }
  return EtaQuotient(level, exps);
}

nlohmann::ordered_json EtaQuotient::to_json() const {
  nlohmann::ordered_json exps = nlohmann::ordered_json::object();
  for (auto [r, e] : exponents_) exps[std::to_string(r)] = e;
  return {{"level", level_.value()}, {"exponents", exps}};
}

EtaQuotient EtaQuotient::twisted(Int x) const {
  const Int n = level_.value();
  if (gcd(x, n) != 1) fail(ErrorKind::NotCoprime, "twist needs a unit modulo N");
  std::map<Int, Int> exps;
  for (auto [r, e] : exponents_) exps[mod(r * x, n)] += e;
  return EtaQuotient(level_, exps);
}

QSeries quotient_series(const EtaQuotient& q, Int terms) {
  if (terms < 1) fail(ErrorKind::TruncationTooSmall, "truncation must be positive");
  QSeries out = QSeries::one(q.level());
  for (auto [r, e] : q.exponents()) out = out * eta_series(q.level(), r, terms).pow(e);
  if (out.bound() >= QSeries::kExact) {
    // Trivial quotient: still report a finite truncation.
    out = out.truncated(terms * 12 * q.level().value());
  }
  return out;
}

bool passes_modularity_screen(const EtaQuotient& q) {
  const Int n = q.level().value();
  Int s0 = 0, s1 = 0, s2 = 0;
  for (auto [r, e] : q.exponents()) {
    s0 += e;
    s1 += r * e;
    s2 += r * r * e;
  }
  return mod(s0, 12) == 0 && mod(s1, 2) == 0 && mod(s2, 2 * n) == 0;
}

Rational order_at_cusp_exact(const EtaQuotient& q, const CuspClass& c) {
  if (!(c.level == q.level())) {
    fail(ErrorKind::LevelMismatch, "cusp and quotient at different levels");
  }
  if (c.group.kind() != GroupKind::Gamma1) {
    fail(ErrorKind::InvalidArgument, "orders are computed on X_1(N) cusps");
  }
  const Int n = q.level().value();
  const Int h = width_and_stabilizer_sign(c).width;
  Rational sum(0);
  for (auto [r, e] : q.exponents()) sum += e * periodic_bernoulli2(Rational(r * c.x, c.d));
  return sum * Rational(h * c.d * c.d, 2 * n);
}

Int ord_at_cusp(const EtaQuotient& q, const CuspClass& c) {
  const Rational ord = order_at_cusp_exact(q, c);
  if (ord.denominator() != 1) {
    fail(ErrorKind::NonIntegralOrder,
         "order " + to_string(ord) + " at " + c.label() + " is not an integer");
  }
  return ord.numerator();
}

Int CuspDivisor::degree() const {
  Int total = 0;
  for (const auto& [c, m] : entries) total += m;
  return total;
}

Int CuspDivisor::order_at(const CuspClass& c) const {
  for (const auto& [cusp, m] : entries)
    if (cusp == c) return m;
  fail(ErrorKind::InvalidArgument, "cusp " + c.label() + " not in divisor support");
}

std::vector<std::pair<CuspClass, Int>> CuspDivisor::pole_part() const {
  std::vector<std::pair<CuspClass, Int>> out;
  for (const auto& [c, m] : entries)
    if (m < 0) out.emplace_back(c, -m);
  return out;
}

std::vector<std::pair<CuspClass, Int>> CuspDivisor::zero_part() const {
  std::vector<std::pair<CuspClass, Int>> out;
  for (const auto& [c, m] : entries)
    if (m > 0) out.emplace_back(c, m);
  return out;
}

CuspDivisor divisor(const EtaQuotient& q) {
  CuspDivisor out{q.level(), {}};
  for (const auto& c : atlas(GroupTag::gamma1(q.level())).cusps()) {
    out.entries.emplace_back(c, ord_at_cusp(q, c));
  }
  if (out.degree() != 0) {
    fail(ErrorKind::NonzeroDegree,
         "divisor has total degree " + std::to_string(out.degree()));
  }
  return out;
}

EtaQuotient x1_20_function_f() {
  return EtaQuotient(Level(20), {{2, 1}, {4, 2}, {6, 2}, {1, -2}, {8, -1}, {9, -2}});
}

EtaQuotient x1_20_function_g() {
  return EtaQuotient(Level(20),
                     {{3, 1}, {4, 2}, {5, 1}, {6, 1}, {7, 1}, {1, -2}, {8, -2}, {9, -1}, {10, -1}});
}

namespace {

// Pole order of a divisor concentrated at s; anything else fails loudly.
Int single_pole_order(const CuspDivisor& div, const CuspClass& s, const char* name) {
  auto poles = div.pole_part();
  if (poles.size() != 1 || !(poles.front().first == s)) {
    fail(ErrorKind::InvariantViolation,
         std::string("function ") + name + " does not have its only pole at " + s.label());
  }
  return poles.front().second;
}

nlohmann::ordered_json series_crosscheck(const EtaQuotient& q, Int terms) {
  const Level& level = q.level();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : atlas(GroupTag::gamma1(level)).cusps()) {
    if (c.d != level.value()) continue;
    const Rational closed = order_at_cusp_exact(q, c);
    const Rational series = quotient_series(q.twisted(c.x), terms).leading_exponent();
    if (closed != series) {
      fail(ErrorKind::InvariantViolation, "order at " + c.label() + " is " + to_string(closed) +
                                              " but the q-series starts at q^" +
                                              to_string(series));
    }
    checks.push_back({{"cusp", c.label()}, {"order", rational_json(closed)}});
  }
  return checks;
}

}  // namespace

X120Certificate certify_x1_20(Int terms) {
  const Level level(20);
  if (terms <= 0) terms = default_terms(level);
  const CuspClass s = canonicalize_x1(level, 1, 10);
  const EtaQuotient f = x1_20_function_f();
  const EtaQuotient g = x1_20_function_g();

  X120Certificate cert{s, divisor(f), divisor(g), {}, g1(level), {}, {}, {}, {}};
  cert.pole_orders = {single_pole_order(cert.divisor_f, s, "f"),
                      single_pole_order(cert.divisor_g, s, "g")};
  const auto check_f = series_crosscheck(f, terms);
  const auto check_g = series_crosscheck(g, terms);
  cert.gaps = gap_sequence_from_nongaps(cert.pole_orders, cert.genus);

  for (const auto& entry : atlas(GroupTag::gamma1(level)).entries)
    if (entry.cusp.irregular) cert.irregular_cusps.push_back(entry.cusp);
  std::set<std::pair<Int, Int>> reached{{s.x, s.y}};
  for (Int q : {4, 5, 20}) {
    const CuspClass img = act_atkin_lehner(build_atkin_lehner(level, q), s);
    cert.atkin_lehner_images.emplace_back(q, img);
    reached.emplace(img.x, img.y);
  }
  std::set<std::pair<Int, Int>> irregular;
  for (const auto& c : cert.irregular_cusps) irregular.emplace(c.x, c.y);
  if (reached != irregular) {
    fail(ErrorKind::InvariantViolation,
         "W_4, W_5, W_20 images of (1:10) do not cover the irregular cusps of X_1(20)");
  }

  nlohmann::ordered_json images = nlohmann::ordered_json::object();
  for (const auto& [q, img] : cert.atkin_lehner_images) images["W_" + std::to_string(q)] = img.label();
  nlohmann::ordered_json data{
      {"cusp", s.label()},
      {"pole_order_f", cert.pole_orders[0]},
      {"pole_order_g", cert.pole_orders[1]},
      {"genus", cert.genus},
      {"gaps", cert.gaps.gaps},
      {"weight", cert.gaps.weight},
      {"images", images},
      {"series_check_f", check_f},
      {"series_check_g", check_g},
      {"terms", terms},
  };
  cert.verdict.status = cert.gaps.weierstrass() ? Status::Weierstrass : Status::NotWeierstrass;
  cert.verdict.weight = cert.gaps.weight;
  cert.verdict.certificate.push_back(CertStep{Rule::EtaCertificate, std::move(data)});
  cert.verdict.decided_by = Rule::EtaCertificate;
  return cert;
}

}  // namespace cuspforge
