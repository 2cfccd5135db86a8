#include "severi/numeric.hpp"

#include <algorithm>
#include <cctype>

#include "severi/error.hpp"

namespace severi {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::vector<Integer> divisors(const Integer& n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "divisors: n must be positive");
  std::vector<Integer> low;
  std::vector<Integer> high;
  for (Integer i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      low.push_back(i);
      Integer j = n / i;
      if (j != i) high.push_back(j);
    }
  }
  std::reverse(high.begin(), high.end());
  low.insert(low.end(), high.begin(), high.end());
  return low;
}

std::uint64_t to_u64(const Integer& n, std::string_view what) {
  if (n < 0 || !n.fits_ulong_p()) {
    raise(ErrorCode::BudgetExceeded,
          std::string(what) + " is outside the supported range: " + n.get_str());
  }
  return n.get_ui();
}

std::string to_fraction_string(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_compact_string(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_fraction_string(r);
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
    raise(ErrorCode::InvalidArgument, "malformed rational: '" + std::string(text) + "'");
  }
  std::string num_s(num[0] == '+' ? num.substr(1) : num);
  Integer n(num_s, 10);
  Integer d(std::string(den), 10);
  if (d == 0) raise(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace severi
