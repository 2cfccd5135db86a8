#include "doctest.h"
#include "generators.hpp"
#include "severi/error.hpp"
#include "severi/series.hpp"

using namespace severi;

namespace {

TruncSeries S(std::vector<Rational> c, std::int64_t p) { return TruncSeries(std::move(c), Precision::finite(p)); }
TruncSeries E(std::vector<Rational> c) { return TruncSeries(std::move(c), Precision::exact()); }

}  // namespace

TEST_CASE("Precision") {
  CHECK(Precision::exact().is_exact());
  CHECK(Precision::finite(5).covers(4));
  CHECK_FALSE(Precision::finite(5).covers(5));
  CHECK(Precision::exact().covers(1000000));
  CHECK(min(Precision::exact(), Precision::finite(3)) == Precision::finite(3));
  CHECK(min(Precision::finite(7), Precision::finite(3)) == Precision::finite(3));
  CHECK(Precision::finite(6).shifted_down(2) == Precision::finite(4));
  CHECK_THROWS_AS(Precision::finite(1).shifted_down(2), Error);
  CHECK(Precision::finite(3).scaled(2) == Precision::finite(6));
  CHECK_THROWS_AS(Precision::finite(-1), Error);
  CHECK(Precision::exact().to_string() == "exact");
}

TEST_CASE("TruncSeries storage and valuation") {
  const auto s = S({0, 0, 3, 0, 1, 9}, 5);
  CHECK(s.coefficients().size() == 5);
  CHECK(s.valuation() == 2);
  CHECK(s.coefficient(4) == 1);
  CHECK(s.coefficient(40) == 0);
  CHECK(S({0, 0}, 4).valuation() == std::nullopt);
  CHECK(S({0, 0}, 4).valuation_lower_bound() == 4);
  CHECK(TruncSeries().valuation_lower_bound() == std::nullopt);
  CHECK(TruncSeries().is_exact_zero());
  CHECK_FALSE(TruncSeries::zero(Precision::finite(3)).is_exact_zero());
  CHECK(E({1, -2}).to_string() == "1 + -2*t");
  CHECK(S({Rational(1, 2), 0, 1}, 5).to_string() == "1/2 + 1*t^2 + O(t^5)");
  CHECK(TruncSeries::monomial(3, 2) == E({0, 0, 3}));
}

TEST_CASE("precision propagation") {
  // (t + O(t^4)) * (t^2 + O(t^5)) is known below min(4 + 2, 5 + 1) = 6
  const auto p = S({0, 1}, 4) * S({0, 0, 1}, 5);
  CHECK(p.precision() == Precision::finite(6));
  CHECK(p.coefficient(3) == 1);
  CHECK((S({1}, 3) + E({0, 0, 0, 0, 7})).precision() == Precision::finite(3));
  CHECK((TruncSeries() * S({1, 1}, 2)).is_exact_zero());
  CHECK((Rational(0) * S({1, 1}, 2)).is_exact_zero());
  CHECK(E({0, 1}).substitute_power(3) == E({0, 0, 0, 1}));
  CHECK(S({0, 1}, 2).substitute_power(3).precision() == Precision::finite(6));
  CHECK(S({0, 0, 5, 1}, 6).divided_by_t_power(2) == S({5, 1}, 4));
  CHECK_THROWS_AS(S({0, 1}, 3).divided_by_t_power(2), Error);
  CHECK_THROWS_AS(S({0}, 1).divided_by_t_power(2), Error);
}

TEST_CASE("ring identities on random exact series") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = E(gen::poly_coeffs(rng, 0, 5));
    const auto b = E(gen::poly_coeffs(rng, 0, 5));
    const auto c = E(gen::poly_coeffs(rng, 0, 5));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_exact_zero());
    CHECK(a.pow(3) == a * a * a);
    CHECK((a * b).substitute_power(2) == a.substitute_power(2) * b.substitute_power(2));
  }
}

TEST_CASE("truncation commutes with arithmetic where known") {
  gen::Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = E(gen::poly_coeffs(rng, 0, 8));
    const auto b = E(gen::poly_coeffs(rng, 0, 8));
    const auto pa = Precision::finite(rng.uniform(1, 8));
    const auto pb = Precision::finite(rng.uniform(1, 8));
    const auto ta = a.truncated(pa);
    const auto tb = b.truncated(pb);
    CHECK(agree_where_known(ta * tb, a * b));
    CHECK(agree_where_known(ta + tb, a + b));
    CHECK(agree_where_known(ta.substitute_power(3), a.substitute_power(3)));
    CHECK((ta * tb).precision() != Precision::exact());
  }
}
