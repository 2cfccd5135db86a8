#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "severi/lattice.hpp"

namespace severi {

/// A partition of Z^2: a nonempty multiset of finite-index sublattices that
/// together span Z^2. Parts are kept sorted, so equal multisets compare equal.
class Partition {
 public:
  /// Sorts the parts. Throws InvalidArgument when empty and NotSpanning when
  /// the parts do not add up to Z^2.
  explicit Partition(std::vector<Sublattice2> parts);

  const std::vector<Sublattice2>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  Integer degree() const;

  /// "[(a,b,c),(a,b,c),...]", the DOT node label.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& x, const Partition& y);

 private:
  std::vector<Sublattice2> parts_;
};

/// Join of a list of sublattices; the empty join is rejected.
Sublattice2 join_all(const std::vector<Sublattice2>& lattices);

/// Enumeration stops with BudgetExceeded past this many partitions.
inline constexpr std::size_t kDefaultPartitionBudget = 200000;

/// Every partition of degree d and length k, sorted. Empty when there are none.
std::vector<Partition> enumerate_partitions(std::uint64_t d, std::uint64_t k,
                                            std::size_t budget = kDefaultPartitionBudget);

/// k-1 copies of Z^2 and (1,0,d-k+1). Throws OutOfRange unless 2 <= k <= d.
Partition witness_partition(std::uint64_t d, std::uint64_t k);

/// Replaces parts i and j by their sum. Throws IndexOutOfRange.
Partition merge_arrow(const Partition& p, std::size_t i, std::size_t j);

/// Edge test by the pairwise description: some pair in p1 and some pair in p2
/// have equal sums and equal index sums, and the remaining parts agree.
/// Throws ShapeMismatch when lengths or degrees differ.
bool is_edge(const Partition& p1, const Partition& p2);

/// Edge test by roofs: some partition one shorter receives an arrow from each
/// of p1 and p2 with the same new term.
bool is_edge_via_roof(const Partition& p1, const Partition& p2);

struct PartitionGraph {
  std::vector<Partition> vertices;
  /// Pairs (i, j), i < j, into `vertices`; sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Vertices of degree d, length k, and all edges among them.
PartitionGraph partition_graph(std::uint64_t d, std::uint64_t k,
                               std::size_t budget = kDefaultPartitionBudget);

/// Connected components, each sorted; components ordered by smallest member.
std::vector<std::vector<Partition>> connected_components(std::uint64_t d, std::uint64_t k,
                                                         std::size_t budget = kDefaultPartitionBudget);

/// Replaces parts i and j by (M, replacement) where M is their sum. Requires
/// replacement inside M with index(replacement) = index(p_i) + index(p_j) - index(M).
/// Throws IndexOutOfRange, or InvalidMove if the conditions fail or the move
/// would return p itself.
Partition replace_pair_move(const Partition& p, std::size_t i, std::size_t j,
                            const Sublattice2& replacement);

/// Endpoint of canonical_path: k-1 copies of Z^2 and (d-k+1,0,1).
/// Throws OutOfRange unless 2 <= k <= d.
Partition canonical_partition(std::uint64_t d, std::uint64_t k);

/// Edge chain q1, ..., qT from p to canonical_partition(deg p, len p); empty
/// when p is canonical. Each consecutive pair (p = q0) is an edge.
/// Throws OutOfRange for length < 2.
std::vector<Partition> canonical_path(const Partition& p);

}  // namespace severi
