#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "severi/numeric.hpp"

namespace severi {

using Vec2 = std::array<Integer, 2>;

/// A finite-index sublattice of Z^2 in lower-triangular Hermite normal form:
/// the lattice spanned by (a, 0) and (b, c) with a, c >= 1 and 0 <= b < a.
/// Equal lattices have equal triples, so comparison is on (a, b, c).
class Sublattice2 {
 public:
  /// Throws InvalidArgument unless the triple is canonical.
  Sublattice2(Integer a, Integer b, Integer c);

  /// Z^2 itself, (1,0,1).
  static Sublattice2 whole();

  /// n * Z^2, i.e. (n,0,n).
  static Sublattice2 scaled(const Integer& n);

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }

  Integer index() const { return a_ * c_; }
  bool is_whole() const { return a_ == 1 && c_ == 1; }

  std::array<Vec2, 2> basis() const { return {Vec2{a_, 0}, Vec2{b_, c_}}; }
  bool contains(const Vec2& v) const;

  /// "(a,b,c)"; also the DOT node label fragment.
  std::string to_string() const;

  friend bool operator==(const Sublattice2& x, const Sublattice2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }
  friend std::strong_ordering operator<=>(const Sublattice2& x, const Sublattice2& y);

 private:
  Integer a_;
  Integer b_;
  Integer c_;
};

/// Throws RankDeficient if the span has rank < 2 (including empty input).
Sublattice2 hnf_from_generators(std::span<const Vec2> generators);

inline Integer index(const Sublattice2& lattice) { return lattice.index(); }

/// L1 + L2.
Sublattice2 join(const Sublattice2& x, const Sublattice2& y);

/// True iff inner is a subset of outer.
bool contains(const Sublattice2& outer, const Sublattice2& inner);

/// The sublattice of `outer` whose coordinates in outer's HNF basis form
/// `relative`; its index in Z^2 is index(outer) * index(relative), and its
/// index in `outer` is index(relative).
Sublattice2 image_in(const Sublattice2& outer, const Sublattice2& relative);

/// All sublattices of index n, lexicographic in (a, b, c). Length is sigma(n).
std::vector<Sublattice2> enumerate_by_index(std::uint64_t n);

/// All sublattices whose index divides d and is at most bound, ordered by
/// index and then lexicographically.
std::vector<Sublattice2> enumerate_index_dividing(std::uint64_t d, std::uint64_t bound);

/// Number of components of the degree-d genus-g Severi variety: the sum over
/// e | d with e <= d/(g-1) of sigma(e). Throws OutOfRange unless 3 <= g <= d+1.
Integer count_components_formula(const Integer& d, const Integer& g);

}  // namespace severi
