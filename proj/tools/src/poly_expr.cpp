#include "severi/cli/poly_expr.hpp"

#include <cctype>

#include "json.hpp"
#include "severi/error.hpp"

namespace severi::cli {

namespace {

constexpr std::uint32_t kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PolyExpr parse() {
    PolyExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer integer_literal() {
    if (!at_digit()) fail("expected an integer");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  static PolyExpr node(PolyExpr::Kind kind, std::vector<PolyExpr> children) {
    PolyExpr e;
    e.kind = kind;
    e.children = std::move(children);
    return e;
  }

  PolyExpr expr() {
    PolyExpr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = node(PolyExpr::Kind::Add, {std::move(lhs), term()});
      } else if (accept('-')) {
        lhs = node(PolyExpr::Kind::Sub, {std::move(lhs), term()});
      } else {
        return lhs;
      }
    }
  }

  PolyExpr term() {
    PolyExpr lhs = unary();
    while (accept('*')) lhs = node(PolyExpr::Kind::Mul, {std::move(lhs), unary()});
    return lhs;
  }

  PolyExpr unary() {
    if (accept('-')) return node(PolyExpr::Kind::Neg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  PolyExpr power() {
    PolyExpr base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    Integer e = integer_literal();
    if (e > kMaxExponent) {
      pos_ = at;
      fail("exponent larger than " + std::to_string(kMaxExponent));
    }
    PolyExpr p = node(PolyExpr::Kind::Pow, {std::move(base)});
    p.exponent = static_cast<std::uint32_t>(e.get_ui());
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') fail("chained '^' needs parentheses");
    return p;
  }

  PolyExpr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_literal();
      Integer den = 1;
      if (accept('/')) {
        const std::size_t at = pos_;
        den = integer_literal();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      PolyExpr e;
      e.kind = PolyExpr::Kind::Number;
      e.value = Rational(num, den);
      e.value.canonicalize();
      return e;
    }
    if (c == 't' || c == 'x') {
      ++pos_;
      PolyExpr e;
      e.kind = c == 't' ? PolyExpr::Kind::VarT : PolyExpr::Kind::VarX;
      return e;
    }
    if (c == '(') {
      ++pos_;
      PolyExpr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_factor(std::string& s, char var, std::uint32_t e) {
  if (e == 0) return;
  if (!s.empty()) s += "*";
  s += var;
  if (e > 1) s += "^" + std::to_string(e);
}

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(Integer(std::to_string(v.get<long long>()), 10));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  raise(ErrorCode::InvalidArgument, "coefficient must be an integer or a \"num/den\" string");
}

}  // namespace

PolyExpr parse_expression(std::string_view text) { return Parser(text).parse(); }

BivariatePoly BivariatePoly::constant(const Rational& c) {
  BivariatePoly p;
  p.add_term({0, 0}, c);
  return p;
}

BivariatePoly BivariatePoly::variable_t() {
  BivariatePoly p;
  p.add_term({0, 1}, 1);
  return p;
}

BivariatePoly BivariatePoly::variable_x() {
  BivariatePoly p;
  p.add_term({1, 0}, 1);
  return p;
}

void BivariatePoly::add_term(const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint32_t BivariatePoly::x_degree() const {
  std::uint32_t d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first);
  return d;
}

std::vector<Rational> BivariatePoly::x_coefficient(std::uint32_t i) const {
  std::vector<Rational> out;
  for (const auto& [key, c] : terms_) {
    if (key.first != i) continue;
    if (out.size() <= key.second) out.resize(key.second + 1);
    out[key.second] = c;
  }
  return out;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r = *this;
  for (auto& [key, c] : r.terms_) c = -c;
  return r;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r = a;
  for (const auto& [key, c] : b.terms_) r.add_term(key, c);
  return r;
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) { return a + (-b); }

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.add_term({ka.first + kb.first, ka.second + kb.second}, Rational(ca * cb));
    }
  }
  return r;
}

BivariatePoly BivariatePoly::pow(std::uint32_t e) const {
  BivariatePoly result = constant(1);
  BivariatePoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

BivariatePoly evaluate(const PolyExpr& expr) {
  using Kind = PolyExpr::Kind;
  switch (expr.kind) {
    case Kind::Number: return BivariatePoly::constant(expr.value);
    case Kind::VarT: return BivariatePoly::variable_t();
    case Kind::VarX: return BivariatePoly::variable_x();
    case Kind::Add: return evaluate(expr.children.at(0)) + evaluate(expr.children.at(1));
    case Kind::Sub: return evaluate(expr.children.at(0)) - evaluate(expr.children.at(1));
    case Kind::Mul: return evaluate(expr.children.at(0)) * evaluate(expr.children.at(1));
    case Kind::Neg: return -evaluate(expr.children.at(0));
    case Kind::Pow: return evaluate(expr.children.at(0)).pow(expr.exponent);
  }
  raise(ErrorCode::InvalidArgument, "malformed expression tree");
}

std::string print_normalized(const BivariatePoly& poly) {
  if (poly.terms().empty()) return "0";
  std::string out;
  // Map order is x ascending; walk it backwards by x, forwards by t.
  std::vector<std::pair<BivariatePoly::Key, Rational>> ordered(poly.terms().begin(), poly.terms().end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    if (l.first.first != r.first.first) return l.first.first > r.first.first;
    return l.first.second < r.first.second;
  });
  for (const auto& [key, c] : ordered) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c);
    std::string mono;
    const bool has_vars = key.first > 0 || key.second > 0;
    if (magnitude != 1 || !has_vars) mono = to_compact_string(magnitude);
    append_factor(mono, 't', key.second);
    append_factor(mono, 'x', key.first);
    out += mono;
  }
  return out;
}

WeierstrassPoly to_weierstrass(const BivariatePoly& poly) {
  const std::uint32_t m = poly.x_degree();
  if (m == 0) raise(ErrorCode::NotMonic, "polynomial has no positive power of x");
  const auto lead = poly.x_coefficient(m);
  if (lead.size() != 1 || lead[0] != 1) {
    raise(ErrorCode::NotMonic, "leading coefficient in x is not 1");
  }
  std::vector<TruncSeries> alphas;
  for (std::uint32_t j = 1; j <= m; ++j) {
    alphas.emplace_back(poly.x_coefficient(m - j), Precision::exact());
  }
  return WeierstrassPoly(MonicPoly(std::move(alphas)));
}

BivariatePoly to_bivariate(const MonicPoly& poly) {
  const auto m = static_cast<std::uint32_t>(poly.degree());
  BivariatePoly out = BivariatePoly::variable_x().pow(m);
  for (std::uint32_t j = 1; j <= m; ++j) {
    const auto& a = poly.alpha(j);
    if (!a.precision().is_exact()) {
      raise(ErrorCode::InvalidArgument, "truncated coefficients have no exact polynomial form");
    }
    const auto& coeffs = a.coefficients();
    for (std::uint32_t e = 0; e < coeffs.size(); ++e) {
      out = out + BivariatePoly::constant(coeffs[e]) * BivariatePoly::variable_t().pow(e) *
                      BivariatePoly::variable_x().pow(m - j);
    }
  }
  return out;
}

WeierstrassPoly parse_poly(std::string_view text) { return to_weierstrass(evaluate(parse_expression(text))); }

WeierstrassPoly parse_poly_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  if (!doc.is_object() || !doc.contains("alphas") || !doc["alphas"].is_array()) {
    raise(ErrorCode::InvalidArgument, "structured polynomial needs an \"alphas\" array");
  }
  Precision precision = Precision::exact();
  if (doc.contains("precision")) {
    const auto& p = doc["precision"];
    if (p.is_number_integer()) {
      precision = Precision::finite(p.get<std::int64_t>());
    } else if (!(p.is_string() && p.get<std::string>() == "exact")) {
      raise(ErrorCode::InvalidArgument, "precision must be an integer or \"exact\"");
    }
  }
  std::vector<TruncSeries> alphas;
  for (const auto& row : doc["alphas"]) {
    if (!row.is_array()) raise(ErrorCode::InvalidArgument, "each alpha must be an array of coefficients");
    std::vector<Rational> coeffs;
    for (const auto& v : row) coeffs.push_back(json_rational(v));
    alphas.emplace_back(std::move(coeffs), precision);
  }
  if (doc.contains("m") && doc["m"] != alphas.size()) {
    raise(ErrorCode::InvalidArgument, "\"m\" does not match the number of alphas");
  }
  return WeierstrassPoly(MonicPoly(std::move(alphas)));
}

std::string poly_to_json(const MonicPoly& poly) {
  nlohmann::json doc;
  doc["m"] = poly.degree();
  doc["alphas"] = nlohmann::json::array();
  for (const auto& a : poly.alphas()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& c : a.coefficients()) row.push_back(to_fraction_string(c));
    doc["alphas"].push_back(std::move(row));
  }
  const Precision p = poly.precision();
  if (p.is_exact()) {
    doc["precision"] = "exact";
  } else {
    doc["precision"] = p.terms();
  }
  return doc.dump();
}

}  // namespace severi::cli
