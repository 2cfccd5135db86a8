#include "severi/series.hpp"

#include <algorithm>

#include "severi/error.hpp"

namespace severi {

Precision Precision::finite(std::int64_t terms) {
  if (terms < 0) raise(ErrorCode::InvalidArgument, "precision must be >= 0");
  return Precision(terms);
}

std::int64_t Precision::terms() const {
  if (is_exact()) raise(ErrorCode::InvalidArgument, "exact precision has no term count");
  return *terms_;
}

Precision Precision::shifted_down(std::int64_t by) const {
  if (is_exact()) return *this;
  if (*terms_ < by) {
    raise(ErrorCode::PrecisionExhausted, "cannot drop " + std::to_string(by) +
                                             " terms from a series known to " + to_string());
  }
  return Precision(*terms_ - by);
}

Precision Precision::shifted_up(std::int64_t by) const {
  return is_exact() ? *this : Precision(*terms_ + by);
}

Precision Precision::scaled(std::int64_t factor) const {
  return is_exact() ? *this : Precision(*terms_ * factor);
}

Precision min(const Precision& x, const Precision& y) {
  if (x.is_exact()) return y;
  if (y.is_exact()) return x;
  return Precision(std::min(*x.terms_, *y.terms_));
}

std::string Precision::to_string() const {
  return is_exact() ? std::string("exact") : std::to_string(*terms_);
}

TruncSeries::TruncSeries(std::vector<Rational> coefficients, Precision precision)
    : coeffs_(std::move(coefficients)), precision_(precision) {
  normalize();
}

TruncSeries TruncSeries::monomial(const Rational& c, std::int64_t exponent) {
  if (exponent < 0) raise(ErrorCode::InvalidArgument, "negative exponent");
  std::vector<Rational> coeffs(static_cast<std::size_t>(exponent) + 1);
  coeffs.back() = c;
  return TruncSeries(std::move(coeffs), Precision::exact());
}

void TruncSeries::normalize() {
  if (!precision_.is_exact() &&
      coeffs_.size() > static_cast<std::size_t>(precision_.terms())) {
    coeffs_.resize(static_cast<std::size_t>(precision_.terms()));
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational TruncSeries::coefficient(std::int64_t exponent) const {
  if (exponent < 0 || static_cast<std::size_t>(exponent) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

std::optional<std::int64_t> TruncSeries::valuation() const {
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] != 0) return static_cast<std::int64_t>(e);
  }
  return std::nullopt;
}

std::optional<std::int64_t> TruncSeries::valuation_lower_bound() const {
  if (auto v = valuation()) return v;
  if (precision_.is_exact()) return std::nullopt;
  return precision_.terms();
}

TruncSeries TruncSeries::truncated(Precision precision) const {
  return TruncSeries(coeffs_, min(precision_, precision));
}

TruncSeries TruncSeries::divided_by_t_power(std::int64_t j) const {
  if (j < 0) raise(ErrorCode::InvalidArgument, "negative shift");
  for (std::int64_t e = 0; e < j; ++e) {
    if (!precision_.covers(e)) {
      raise(ErrorCode::PrecisionExhausted, "coefficient of t^" + std::to_string(e) + " is unknown");
    }
    if (coefficient(e) != 0) {
      raise(ErrorCode::InvalidArgument, "series is not divisible by t^" + std::to_string(j));
    }
  }
  std::vector<Rational> coeffs;
  if (coeffs_.size() > static_cast<std::size_t>(j)) {
    coeffs.assign(coeffs_.begin() + j, coeffs_.end());
  }
  return TruncSeries(std::move(coeffs), precision_.shifted_down(j));
}

TruncSeries TruncSeries::substitute_power(std::int64_t mu) const {
  if (mu < 1) raise(ErrorCode::InvalidArgument, "substitution exponent must be >= 1");
  std::vector<Rational> coeffs;
  if (!coeffs_.empty()) {
    coeffs.resize((coeffs_.size() - 1) * static_cast<std::size_t>(mu) + 1);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) coeffs[e * static_cast<std::size_t>(mu)] = coeffs_[e];
  }
  // Known exponents < P become known exponents < mu*P; the gaps are zero.
  return TruncSeries(std::move(coeffs), precision_.scaled(mu));
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncSeries operator+(const TruncSeries& x, const TruncSeries& y) {
  std::vector<Rational> coeffs(std::max(x.coeffs_.size(), y.coeffs_.size()));
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (e < x.coeffs_.size()) coeffs[e] += x.coeffs_[e];
    if (e < y.coeffs_.size()) coeffs[e] += y.coeffs_[e];
  }
  return TruncSeries(std::move(coeffs), min(x.precision_, y.precision_));
}

TruncSeries operator-(const TruncSeries& x, const TruncSeries& y) { return x + (-y); }

TruncSeries operator*(const TruncSeries& x, const TruncSeries& y) {
  const auto vx = x.valuation_lower_bound();
  const auto vy = y.valuation_lower_bound();
  if (!vx || !vy) return TruncSeries();
  // Error terms: x = known + O(t^Px), y = known + O(t^Py), so the product is
  // known below min(Px + val y, Py + val x).
  Precision precision = min(x.precision_.shifted_up(*vy), y.precision_.shifted_up(*vx));
  std::vector<Rational> coeffs;
  if (!x.coeffs_.empty() && !y.coeffs_.empty()) {
    std::size_t len = x.coeffs_.size() + y.coeffs_.size() - 1;
    if (!precision.is_exact()) len = std::min(len, static_cast<std::size_t>(precision.terms()));
    coeffs.resize(len);
    for (std::size_t i = 0; i < x.coeffs_.size() && i < len; ++i) {
      if (x.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < y.coeffs_.size() && i + j < len; ++j) {
        coeffs[i + j] += x.coeffs_[i] * y.coeffs_[j];
      }
    }
  }
  return TruncSeries(std::move(coeffs), precision);
}

TruncSeries operator*(const Rational& c, const TruncSeries& x) {
  if (c == 0) return TruncSeries();
  TruncSeries r = x;
  for (auto& coeff : r.coeffs_) coeff *= c;
  return r;
}

TruncSeries TruncSeries::pow(std::uint64_t e) const {
  TruncSeries result = constant(1);
  for (std::uint64_t n = 0; n < e; ++n) result = result * *this;
  return result;
}

bool agree_where_known(const TruncSeries& x, const TruncSeries& y) {
  const Precision both = min(x.precision_, y.precision_);
  const std::size_t len = std::max(x.coeffs_.size(), y.coeffs_.size());
  for (std::size_t e = 0; e < len; ++e) {
    if (!both.covers(static_cast<std::int64_t>(e))) break;
    if (x.coefficient(static_cast<std::int64_t>(e)) != y.coefficient(static_cast<std::int64_t>(e))) {
      return false;
    }
  }
  return true;
}

std::string TruncSeries::to_string() const {
  std::string s;
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    if (!s.empty()) s += " + ";
    s += to_compact_string(coeffs_[e]);
    if (e == 1) s += "*t";
    if (e > 1) s += "*t^" + std::to_string(e);
  }
  if (!precision_.is_exact()) {
    if (!s.empty()) s += " + ";
    s += "O(t^" + std::to_string(precision_.terms()) + ")";
  }
  return s.empty() ? "0" : s;
}

}  // namespace severi
