#include "severi/hermite.hpp"

#include <algorithm>
#include <string>

#include "severi/error.hpp"

namespace severi {

namespace {

void axpy_row(IntRow& target, const Integer& factor, const IntRow& source) {
  for (std::size_t c = 0; c < target.size(); ++c) target[c] -= factor * source[c];
}

}  // namespace

IntMatrix lower_hermite(std::span<const IntRow> generators, std::size_t dim) {
  IntMatrix pool;
  pool.reserve(generators.size());
  for (const auto& g : generators) {
    if (g.size() != dim) {
      raise(ErrorCode::InvalidArgument, "generator has length " + std::to_string(g.size()) +
                                            ", expected " + std::to_string(dim));
    }
    if (std::any_of(g.begin(), g.end(), [](const Integer& x) { return x != 0; })) {
      pool.push_back(g);
    }
  }

  IntMatrix basis(dim, IntRow(dim));
  // Eliminate from the last column down so that the basis comes out lower
  // triangular; every row left in the pool is zero in the columns handled so far.
  for (std::size_t step = 0; step < dim; ++step) {
    const std::size_t col = dim - 1 - step;
    while (true) {
      std::size_t pivot = pool.size();
      for (std::size_t r = 0; r < pool.size(); ++r) {
        if (pool[r][col] == 0) continue;
        if (pivot == pool.size() || abs(pool[r][col]) < abs(pool[pivot][col])) pivot = r;
      }
      if (pivot == pool.size()) {
        raise(ErrorCode::RankDeficient, "generators span a lattice of rank < " + std::to_string(dim));
      }
      bool reduced = true;
      for (std::size_t r = 0; r < pool.size(); ++r) {
        if (r == pivot || pool[r][col] == 0) continue;
        axpy_row(pool[r], floor_div(pool[r][col], pool[pivot][col]), pool[pivot]);
        if (pool[r][col] != 0) reduced = false;
      }
      if (reduced) {
        IntRow row = std::move(pool[pivot]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pivot));
        if (row[col] < 0) {
          for (auto& x : row) x = -x;
        }
        basis[col] = std::move(row);
        std::erase_if(pool, [](const IntRow& r) {
          return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
        });
        break;
      }
    }
  }

  for (std::size_t i = 1; i < dim; ++i) {
    for (std::size_t jj = i; jj-- > 0;) {
      Integer q = floor_div(basis[i][jj], basis[jj][jj]);
      if (q != 0) axpy_row(basis[i], q, basis[jj]);
    }
  }
  return basis;
}

bool in_lower_triangular_lattice(const IntMatrix& basis, std::span<const Integer> v) {
  IntRow rest(v.begin(), v.end());
  for (std::size_t step = 0; step < basis.size(); ++step) {
    const std::size_t col = basis.size() - 1 - step;
    if (rest[col] % basis[col][col] != 0) return false;
    Integer coeff = rest[col] / basis[col][col];
    if (coeff != 0) axpy_row(rest, coeff, basis[col]);
  }
  return true;
}

}  // namespace severi
