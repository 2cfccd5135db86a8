#include "severi/lattice.hpp"

#include "severi/error.hpp"
#include "severi/hermite.hpp"

namespace severi {

namespace {

std::strong_ordering compare(const Integer& x, const Integer& y) {
  int c = cmp(x, y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

Sublattice2::Sublattice2(Integer a, Integer b, Integer c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ < 1 || c_ < 1 || b_ < 0 || b_ >= a_) {
    raise(ErrorCode::InvalidArgument, "not a canonical HNF triple: " + to_string());
  }
}

Sublattice2 Sublattice2::whole() { return Sublattice2(1, 0, 1); }

Sublattice2 Sublattice2::scaled(const Integer& n) { return Sublattice2(n, 0, n); }

bool Sublattice2::contains(const Vec2& v) const {
  // v = x*(a,0) + y*(b,c): y = v1/c, then x = (v0 - y*b)/a.
  if (v[1] % c_ != 0) return false;
  Integer y = v[1] / c_;
  return (v[0] - y * b_) % a_ == 0;
}

std::string Sublattice2::to_string() const {
  return "(" + a_.get_str() + "," + b_.get_str() + "," + c_.get_str() + ")";
}

std::strong_ordering operator<=>(const Sublattice2& x, const Sublattice2& y) {
  if (auto o = compare(x.a_, y.a_); o != 0) return o;
  if (auto o = compare(x.b_, y.b_); o != 0) return o;
  return compare(x.c_, y.c_);
}

Sublattice2 hnf_from_generators(std::span<const Vec2> generators) {
  IntMatrix rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) rows.push_back({g[0], g[1]});
  IntMatrix h = lower_hermite(rows, 2);
  return Sublattice2(h[0][0], h[1][0], h[1][1]);
}

Sublattice2 join(const Sublattice2& x, const Sublattice2& y) {
  auto bx = x.basis();
  auto by = y.basis();
  const std::array<Vec2, 4> gens{bx[0], bx[1], by[0], by[1]};
  return hnf_from_generators(gens);
}

bool contains(const Sublattice2& outer, const Sublattice2& inner) {
  auto b = inner.basis();
  return outer.contains(b[0]) && outer.contains(b[1]);
}

Sublattice2 image_in(const Sublattice2& outer, const Sublattice2& relative) {
  auto ob = outer.basis();
  std::array<Vec2, 2> gens;
  auto rb = relative.basis();
  for (std::size_t i = 0; i < 2; ++i) {
    gens[i] = Vec2{rb[i][0] * ob[0][0] + rb[i][1] * ob[1][0],
                   rb[i][0] * ob[0][1] + rb[i][1] * ob[1][1]};
  }
  return hnf_from_generators(gens);
}

std::vector<Sublattice2> enumerate_by_index(std::uint64_t n) {
  if (n < 1) raise(ErrorCode::InvalidArgument, "index must be positive");
  std::vector<Sublattice2> out;
  for (std::uint64_t a = 1; a <= n; ++a) {
    if (n % a != 0) continue;
    const std::uint64_t c = n / a;
    for (std::uint64_t b = 0; b < a; ++b) {
      out.emplace_back(Integer(static_cast<unsigned long>(a)), Integer(static_cast<unsigned long>(b)),
                       Integer(static_cast<unsigned long>(c)));
    }
  }
  return out;
}

std::vector<Sublattice2> enumerate_index_dividing(std::uint64_t d, std::uint64_t bound) {
  if (d < 1 || bound < 1) raise(ErrorCode::InvalidArgument, "d and bound must be positive");
  std::vector<Sublattice2> out;
  for (std::uint64_t e = 1; e <= d && e <= bound; ++e) {
    if (d % e != 0) continue;
    auto level = enumerate_by_index(e);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Integer count_components_formula(const Integer& d, const Integer& g) {
  if (d < 1) raise(ErrorCode::OutOfRange, "d must be positive, got " + d.get_str());
  if (g < 3 || g > d + 1) {
    raise(ErrorCode::OutOfRange, "genus must satisfy 3 <= g <= d+1, got g=" + g.get_str() +
                                     " for d=" + d.get_str());
  }
  // e <= d/(g-1)  <=>  e*(g-1) <= d
  const Integer bound = d / (g - 1);
  Integer total = 0;
  auto add_sigma = [&](const Integer& e) {
    for (const auto& h : divisors(e)) total += h;
  };
  if (bound * bound <= d) {
    // scanning up to the bound is cheaper than factoring d
    for (Integer e = 1; e <= bound; ++e) {
      if (d % e == 0) add_sigma(e);
    }
    return total;
  }
  for (const auto& e : divisors(d)) {
    if (e > bound) break;
    add_sigma(e);
  }
  return total;
}

}  // namespace severi
