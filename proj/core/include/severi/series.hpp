#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "severi/numeric.hpp"

namespace severi {

/// Number of known leading t-coefficients, or exact (all coefficients known,
/// finitely many nonzero).
class Precision {
 public:
  static Precision exact() { return Precision(); }
  static Precision finite(std::int64_t terms);

  bool is_exact() const noexcept { return !terms_.has_value(); }
  /// Requires !is_exact().
  std::int64_t terms() const;

  /// True iff the coefficient of t^exponent is known.
  bool covers(std::int64_t exponent) const noexcept { return is_exact() || exponent < *terms_; }

  Precision shifted_down(std::int64_t by) const;
  Precision shifted_up(std::int64_t by) const;
  Precision scaled(std::int64_t factor) const;

  friend Precision min(const Precision& x, const Precision& y);
  friend bool operator==(const Precision&, const Precision&) = default;

  std::string to_string() const;

 private:
  Precision() = default;
  explicit Precision(std::int64_t terms) : terms_(terms) {}
  std::optional<std::int64_t> terms_;
};

/// Truncated power series in t over Q: coefficients of t^0, t^1, ... known up
/// to the precision. Storage holds only known coefficients, without trailing
/// zeros.
class TruncSeries {
 public:
  TruncSeries() : precision_(Precision::exact()) {}
  TruncSeries(std::vector<Rational> coefficients, Precision precision);

  static TruncSeries constant(const Rational& c) { return TruncSeries({c}, Precision::exact()); }
  /// c * t^exponent, exact.
  static TruncSeries monomial(const Rational& c, std::int64_t exponent);
  static TruncSeries zero(Precision precision) { return TruncSeries({}, precision); }

  const Precision& precision() const noexcept { return precision_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of t^exponent; zero beyond the stored range. Only meaningful
  /// when precision().covers(exponent).
  Rational coefficient(std::int64_t exponent) const;

  /// Exponent of the first nonzero known coefficient; nullopt when every known
  /// coefficient is zero (then the valuation is >= the precision, or the series
  /// is exactly zero).
  std::optional<std::int64_t> valuation() const;

  /// Best known lower bound on the valuation; nullopt means exactly zero.
  std::optional<std::int64_t> valuation_lower_bound() const;

  bool is_exact_zero() const { return coeffs_.empty() && precision_.is_exact(); }

  /// Same series known to fewer terms.
  TruncSeries truncated(Precision precision) const;

  /// t^{-j} * s; requires the first j coefficients to be known zeros.
  TruncSeries divided_by_t_power(std::int64_t j) const;

  /// s(t^mu).
  TruncSeries substitute_power(std::int64_t mu) const;

  TruncSeries operator-() const;
  friend TruncSeries operator+(const TruncSeries& x, const TruncSeries& y);
  friend TruncSeries operator-(const TruncSeries& x, const TruncSeries& y);
  friend TruncSeries operator*(const TruncSeries& x, const TruncSeries& y);
  friend TruncSeries operator*(const Rational& c, const TruncSeries& x);

  TruncSeries pow(std::uint64_t e) const;

  /// Equality of stored data (coefficients and precision).
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  /// True iff x and y agree on every exponent both know.
  friend bool agree_where_known(const TruncSeries& x, const TruncSeries& y);

  /// E.g. "1 + -2*t + O(t^5)".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
  Precision precision_;
};

}  // namespace severi
