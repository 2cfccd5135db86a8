#include "severi/symplectic.hpp"

#include <algorithm>

#include "severi/error.hpp"
#include "severi/hermite.hpp"

namespace severi {

SymplecticForm1d::SymplecticForm1d(Integer d) : d_(std::move(d)) {
  if (d_ < 1) raise(ErrorCode::InvalidArgument, "polarization parameter d must be >= 1");
}

Gram4 SymplecticForm1d::gram() const {
  Gram4 g{};
  for (auto& row : g) row.fill(0);
  g[0][2] = 1;
  g[1][3] = d_;
  g[2][0] = -1;
  g[3][1] = -d_;
  return g;
}

Integer SymplecticForm1d::eval(const Vec4& x, const Vec4& y) const {
  // x^T G y with the block shape written out.
  return x[0] * y[2] - x[2] * y[0] + d_ * (x[1] * y[3] - x[3] * y[1]);
}

namespace {

Sublattice4::Rows to_rows(const IntMatrix& m) {
  Sublattice4::Rows rows;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) rows[i][j] = m[i][j];
  }
  return rows;
}

std::strong_ordering compare(const Integer& x, const Integer& y) {
  int c = cmp(x, y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Ordered factorizations of k into `parts` positive factors.
void ordered_factorizations(std::uint64_t k, std::size_t parts, std::vector<std::uint64_t>& prefix,
                            std::vector<std::vector<std::uint64_t>>& out) {
  if (prefix.size() + 1 == parts) {
    prefix.push_back(k);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::uint64_t f = 1; f <= k; ++f) {
    if (k % f != 0) continue;
    prefix.push_back(f);
    ordered_factorizations(k / f, parts, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Sublattice4::Sublattice4(Rows rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (rows_[i][i] < 1) raise(ErrorCode::InvalidArgument, "HNF diagonal must be positive");
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (rows_[i][j] != 0) raise(ErrorCode::InvalidArgument, "HNF basis must be lower triangular");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (rows_[i][j] < 0 || rows_[i][j] >= rows_[j][j]) {
        raise(ErrorCode::InvalidArgument, "HNF entry below the diagonal is not reduced");
      }
    }
  }
}

Sublattice4 Sublattice4::from_generators(std::span<const Vec4> generators) {
  IntMatrix gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(IntRow(g.begin(), g.end()));
  return Sublattice4(to_rows(lower_hermite(gens, 4)));
}

Sublattice4 Sublattice4::whole() { return scaled(1); }

Sublattice4 Sublattice4::scaled(const Integer& k) {
  Rows rows;
  for (std::size_t i = 0; i < 4; ++i) {
    rows[i].fill(0);
    rows[i][i] = k;
  }
  return Sublattice4(rows);
}

Integer Sublattice4::index() const {
  return rows_[0][0] * rows_[1][1] * rows_[2][2] * rows_[3][3];
}

bool Sublattice4::contains(const Vec4& v) const {
  IntMatrix basis;
  for (const auto& r : rows_) basis.push_back(IntRow(r.begin(), r.end()));
  return in_lower_triangular_lattice(basis, v);
}

bool Sublattice4::contains(const Sublattice4& inner) const {
  return std::all_of(inner.rows_.begin(), inner.rows_.end(),
                     [this](const Vec4& v) { return contains(v); });
}

std::string Sublattice4::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += "[";
    for (std::size_t j = 0; j < 4; ++j) {
      if (j) s += ",";
      s += rows_[i][j].get_str();
    }
    s += "]";
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Sublattice4& x, const Sublattice4& y) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (auto o = compare(x.rows_[i][j], y.rows_[i][j]); o != 0) return o;
    }
  }
  return std::strong_ordering::equal;
}

Sublattice4 d_kernel(const SymplecticForm1d& form) {
  // Lattice of (x, x^T G + d z) in Z^8; its vectors with vanishing second half
  // are exactly (x, 0) with x^T G = 0 mod d. The full-rank HNF puts them in
  // the first four rows.
  const Gram4 g = form.gram();
  IntMatrix gens;
  for (std::size_t i = 0; i < 4; ++i) {
    IntRow row(8, 0);
    row[i] = 1;
    for (std::size_t j = 0; j < 4; ++j) row[4 + j] = g[i][j];
    gens.push_back(std::move(row));
  }
  for (std::size_t j = 0; j < 4; ++j) {
    IntRow row(8, 0);
    row[4 + j] = form.d();
    gens.push_back(std::move(row));
  }
  IntMatrix h = lower_hermite(gens, 8);
  std::vector<Vec4> kernel;
  for (std::size_t i = 0; i < 4; ++i) kernel.push_back(Vec4{h[i][0], h[i][1], h[i][2], h[i][3]});
  return Sublattice4::from_generators(kernel);
}

bool condition_divisibility(const SymplecticForm1d& form, const Sublattice4& lattice,
                            const Integer& k) {
  if (k < 1) raise(ErrorCode::InvalidArgument, "k must be >= 1");
  const auto& r = lattice.rows();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (form.eval(r[i], r[j]) % k != 0) return false;
    }
  }
  return true;
}

bool condition_kernel(const SymplecticForm1d& form, const Sublattice4& lattice, const Integer& k) {
  if (k < 1) raise(ErrorCode::InvalidArgument, "k must be >= 1");
  if (form.d() % k != 0) return false;
  return lattice.contains(d_kernel(form));
}

std::vector<Sublattice4> enumerate_sublattices4(std::uint64_t k, std::uint64_t bound) {
  if (k < 1) raise(ErrorCode::InvalidArgument, "index must be >= 1");
  if (k > bound) {
    raise(ErrorCode::BudgetExceeded, "index " + std::to_string(k) +
                                         " exceeds the enumeration bound " + std::to_string(bound));
  }
  std::vector<std::vector<std::uint64_t>> diagonals;
  std::vector<std::uint64_t> prefix;
  ordered_factorizations(k, 4, prefix, diagonals);

  std::vector<Sublattice4> out;
  for (const auto& diag : diagonals) {
    // Free entries (i, j) with i > j range over [0, diag[j]).
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < i; ++j) slots.emplace_back(i, j);
    }
    std::vector<std::uint64_t> counter(slots.size(), 0);
    while (true) {
      Sublattice4::Rows rows;
      for (std::size_t i = 0; i < 4; ++i) {
        rows[i].fill(0);
        rows[i][i] = static_cast<unsigned long>(diag[i]);
      }
      for (std::size_t s = 0; s < slots.size(); ++s) {
        rows[slots[s].first][slots[s].second] = static_cast<unsigned long>(counter[s]);
      }
      out.emplace_back(rows);

      std::size_t s = 0;
      for (; s < slots.size(); ++s) {
        if (++counter[s] < diag[slots[s].second]) break;
        counter[s] = 0;
      }
      if (s == slots.size()) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LemmaReport verify_lemma_equivalence(const Integer& d, std::uint64_t k, std::uint64_t bound) {
  const SymplecticForm1d form(d);
  const Integer kk(static_cast<unsigned long>(k));
  LemmaReport report;
  report.d = d;
  report.k = kk;
  for (const auto& lattice : enumerate_sublattices4(k, bound)) {
    const bool c1 = condition_divisibility(form, lattice, kk);
    const bool c2 = condition_kernel(form, lattice, kk);
    ++report.total;
    if (c1) ++report.count_cond1;
    if (c2) ++report.count_cond2;
    if (c1 != c2 && !report.counterexample) {
      report.equivalent = false;
      report.counterexample = lattice;
    }
  }
  return report;
}

Integer form_content(const SymplecticForm1d& form, const Sublattice4& lattice) {
  Integer g = 0;
  const auto& r = lattice.rows();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) g = gcd(g, form.eval(r[i], r[j]));
  }
  return g;
}

bool divisibility_inclusion_check(const SymplecticForm1d& form, const Sublattice4& lattice) {
  const Integer outer = form_content(form, Sublattice4::whole());
  const Integer inner = form_content(form, lattice);
  if (inner == 0) return false;
  return (lattice.index() * outer) % inner == 0;
}

}  // namespace severi
