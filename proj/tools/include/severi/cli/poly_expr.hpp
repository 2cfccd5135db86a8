#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "severi/numeric.hpp"
#include "severi/weierstrass.hpp"

namespace severi::cli {

/// Syntax tree of a polynomial expression in t and x.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer ('/' integer)? | 't' | 'x' | '(' expr ')'
struct PolyExpr {
  enum class Kind { Number, VarT, VarX, Add, Sub, Mul, Neg, Pow };

  Kind kind = Kind::Number;
  Rational value;             // Number
  std::uint32_t exponent = 0;  // Pow
  std::vector<PolyExpr> children;
};

/// Throws SyntaxError carrying the byte offset of the offending token.
PolyExpr parse_expression(std::string_view text);

/// Polynomial in t and x with rational coefficients; keys are (x-degree,
/// t-degree) and only nonzero coefficients are stored.
class BivariatePoly {
 public:
  using Key = std::pair<std::uint32_t, std::uint32_t>;

  static BivariatePoly constant(const Rational& c);
  static BivariatePoly variable_t();
  static BivariatePoly variable_x();

  const std::map<Key, Rational>& terms() const noexcept { return terms_; }
  /// Largest x-degree with a nonzero coefficient; 0 for constants and zero.
  std::uint32_t x_degree() const;
  /// Coefficient of x^i as a polynomial in t (index = t-degree).
  std::vector<Rational> x_coefficient(std::uint32_t i) const;

  BivariatePoly operator-() const;
  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  BivariatePoly pow(std::uint32_t e) const;

  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

 private:
  void add_term(const Key& key, const Rational& c);
  std::map<Key, Rational> terms_;
};

BivariatePoly evaluate(const PolyExpr& expr);

/// Normalized printing: x-degree descending, then t-degree ascending, e.g.
/// "x^2 - t*x - t^2*x + t^3". Parsing the output gives the same polynomial.
std::string print_normalized(const BivariatePoly& poly);

/// Checks monicity in x (NotMonic) and alpha_j(0) = 0 (NotInWm); the result
/// has exact coefficients.
WeierstrassPoly to_weierstrass(const BivariatePoly& poly);

/// Exact coefficients only; throws InvalidArgument for truncated input.
BivariatePoly to_bivariate(const MonicPoly& poly);

/// parse_expression + evaluate + to_weierstrass.
WeierstrassPoly parse_poly(std::string_view text);

/// Structured form {"m": 2, "alphas": [["-1","-1"], ["0","0","0","1"]],
/// "precision": 64}; alphas[j-1] lists the t-coefficients of alpha_j as
/// "num/den" strings or integers; precision is a term count or "exact"
/// (the default).
WeierstrassPoly parse_poly_json(std::string_view text);
std::string poly_to_json(const MonicPoly& poly);

}  // namespace severi::cli
