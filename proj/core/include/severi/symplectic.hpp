#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "severi/numeric.hpp"

namespace severi {

using Vec4 = std::array<Integer, 4>;
using Gram4 = std::array<std::array<Integer, 4>, 4>;

/// The type-(1,d) alternating form on Z^4 in a symplectic basis b1..b4:
/// Gram matrix [[0, D], [-D, 0]] with D = diag(1, d).
class SymplecticForm1d {
 public:
  /// Throws InvalidArgument if d < 1.
  explicit SymplecticForm1d(Integer d);

  const Integer& d() const noexcept { return d_; }
  Gram4 gram() const;
  Integer eval(const Vec4& x, const Vec4& y) const;

 private:
  Integer d_;
};

inline Integer form_eval(const SymplecticForm1d& form, const Vec4& x, const Vec4& y) {
  return form.eval(x, y);
}

/// Rank-4 sublattice of Z^4 as a canonical lower-triangular HNF basis (rows
/// are basis vectors; entries below the diagonal reduced modulo the diagonal
/// entry of their column).
class Sublattice4 {
 public:
  using Rows = std::array<Vec4, 4>;

  /// Throws InvalidArgument if `rows` is not in canonical form.
  explicit Sublattice4(Rows rows);

  /// Throws RankDeficient if the generators do not span a rank-4 lattice.
  static Sublattice4 from_generators(std::span<const Vec4> generators);
  static Sublattice4 whole();
  static Sublattice4 scaled(const Integer& k);

  const Rows& rows() const noexcept { return rows_; }
  Integer index() const;
  bool contains(const Vec4& v) const;
  bool contains(const Sublattice4& inner) const;

  /// "[[r00,r01,r02,r03],[...],...]"
  std::string to_string() const;

  friend bool operator==(const Sublattice4&, const Sublattice4&) = default;
  friend std::strong_ordering operator<=>(const Sublattice4& x, const Sublattice4& y);

 private:
  Rows rows_;
};

/// {x : form(x, y) in dZ for all y}, obtained by solving the congruences
/// x^T G = 0 (mod d). For this form it equals <d b1, b2, d b3, b4>.
Sublattice4 d_kernel(const SymplecticForm1d& form);

/// form(L x L) is contained in kZ. Checked on pairs of basis vectors.
bool condition_divisibility(const SymplecticForm1d& form, const Sublattice4& lattice,
                            const Integer& k);

/// k | d and d_kernel(form) is contained in L.
bool condition_kernel(const SymplecticForm1d& form, const Sublattice4& lattice, const Integer& k);

/// Largest index enumerate_sublattices4 accepts unless the caller raises it.
/// Counts grow like k^3 (k = 4 gives 155 lattices, k = 12 gives 6200).
inline constexpr std::uint64_t kDefaultSublattice4Bound = 4;

/// All index-k sublattices of Z^4, sorted. Throws BudgetExceeded if k > bound.
std::vector<Sublattice4> enumerate_sublattices4(std::uint64_t k,
                                                std::uint64_t bound = kDefaultSublattice4Bound);

struct LemmaReport {
  Integer d;
  Integer k;
  std::uint64_t total = 0;
  std::uint64_t count_cond1 = 0;
  std::uint64_t count_cond2 = 0;
  bool equivalent = true;
  /// Lexicographically first lattice on which the two conditions disagree.
  std::optional<Sublattice4> counterexample;
};

/// Checks condition_divisibility == condition_kernel over every index-k
/// sublattice of Z^4 for the (1,d) form.
LemmaReport verify_lemma_equivalence(const Integer& d, std::uint64_t k,
                                     std::uint64_t bound = kDefaultSublattice4Bound);

/// gcd of form values on L x L divides index(L) times gcd of form values on
/// Z^4 x Z^4; i.e. [Z^4 : L] form(Z^4 x Z^4) is inside the ideal generated
/// by form(L x L).
bool divisibility_inclusion_check(const SymplecticForm1d& form, const Sublattice4& lattice);

/// gcd of form(u, v) over pairs of basis vectors of L.
Integer form_content(const SymplecticForm1d& form, const Sublattice4& lattice);

}  // namespace severi
