#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "severi/numeric.hpp"

namespace severi {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

/// Canonical lower-triangular Hermite normal form of the full-rank lattice in
/// Z^dim spanned by `generators` (each of length dim).
///
/// Row i of the result is a basis vector whose entries beyond column i are
/// zero, diagonal entries are positive and every entry below the diagonal is
/// reduced into [0, diagonal of its column). Two generator sets span the same
/// lattice iff their forms are equal.
///
/// Throws RankDeficient when the span has rank < dim, and InvalidArgument on
/// ragged input.
IntMatrix lower_hermite(std::span<const IntRow> generators, std::size_t dim);

/// True iff v is an integer combination of the rows of a lower-triangular
/// basis with nonzero diagonal.
bool in_lower_triangular_lattice(const IntMatrix& basis, std::span<const Integer> v);

}  // namespace severi
