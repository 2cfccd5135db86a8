#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace severi {

using Integer = mpz_class;
using Rational = mpq_class;

// Floor division and the matching nonnegative remainder (for positive divisors).
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Positive divisors of n in increasing order. Requires n >= 1.
std::vector<Integer> divisors(const Integer& n);

/// Narrowing conversion for loop bounds; throws BudgetExceeded when the value
/// does not fit.
std::uint64_t to_u64(const Integer& n, std::string_view what);

/// "num/den" with den >= 1; integers print as "n/1".
std::string to_fraction_string(const Rational& q);

/// Human-facing form: "n" for integers, "num/den" otherwise.
std::string to_compact_string(const Rational& q);

/// Accepts "n", "-n", "num/den". Throws InvalidArgument on malformed text or a
/// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace severi
