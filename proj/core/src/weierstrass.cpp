#include "severi/weierstrass.hpp"

#include "severi/error.hpp"

namespace severi {

namespace {

Rational binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

bool known_nonzero_below(const TruncSeries& s, std::int64_t bound) {
  for (std::int64_t e = 0; e < bound; ++e) {
    if (s.precision().covers(e) && s.coefficient(e) != 0) return true;
  }
  return false;
}

}  // namespace

MonicPoly::MonicPoly(std::vector<TruncSeries> alphas) : alphas_(std::move(alphas)) {
  if (alphas_.empty()) raise(ErrorCode::InvalidArgument, "monic polynomial needs degree >= 1");
}

TruncSeries MonicPoly::coefficient_of_x(std::size_t i) const {
  const std::size_t m = degree();
  if (i > m) return TruncSeries();
  if (i == m) return TruncSeries::constant(1);
  return alphas_[m - i - 1];
}

MonicPoly MonicPoly::truncated(Precision precision) const {
  std::vector<TruncSeries> out;
  out.reserve(alphas_.size());
  for (const auto& a : alphas_) out.push_back(a.truncated(precision));
  return MonicPoly(std::move(out));
}

Precision MonicPoly::precision() const {
  Precision p = Precision::exact();
  for (const auto& a : alphas_) p = min(p, a.precision());
  return p;
}

std::string MonicPoly::to_string() const {
  const std::size_t m = degree();
  std::string s = m == 1 ? "x" : "x^" + std::to_string(m);
  for (std::size_t j = 1; j <= m; ++j) {
    const auto& a = alphas_[j - 1];
    if (a.is_exact_zero()) continue;
    s += " + (" + a.to_string() + ")";
    const std::size_t power = m - j;
    if (power == 1) s += "*x";
    if (power > 1) s += "*x^" + std::to_string(power);
  }
  return s;
}

WeierstrassPoly::WeierstrassPoly(MonicPoly poly) : poly_(std::move(poly)) {
  for (std::size_t j = 1; j <= poly_.degree(); ++j) {
    const auto& a = poly_.alpha(j);
    if (!a.precision().covers(0)) {
      raise(ErrorCode::PrecisionExhausted,
            "constant term of alpha_" + std::to_string(j) + " is unknown");
    }
    if (a.coefficient(0) != 0) {
      raise(ErrorCode::NotInWm, "alpha_" + std::to_string(j) + "(0) = " +
                                    to_compact_string(a.coefficient(0)) + " is not zero");
    }
  }
}

WeierstrassPoly from_roots(std::span<const TruncSeries> roots) {
  if (roots.empty()) raise(ErrorCode::InvalidArgument, "need at least one root");
  for (const auto& r : roots) {
    if (!r.precision().covers(0)) raise(ErrorCode::PrecisionExhausted, "root with unknown constant term");
    if (r.coefficient(0) != 0) raise(ErrorCode::NotInWm, "root " + r.to_string() + " does not vanish at t=0");
  }
  // Coefficients of x^0 .. x^n of the running product.
  std::vector<TruncSeries> c{TruncSeries::constant(1)};
  for (const auto& r : roots) {
    std::vector<TruncSeries> next(c.size() + 1);
    for (std::size_t i = 0; i < next.size(); ++i) {
      TruncSeries term;
      if (i >= 1) term = c[i - 1];
      if (i < c.size()) term = term - r * c[i];
      next[i] = std::move(term);
    }
    c = std::move(next);
  }
  const std::size_t m = roots.size();
  std::vector<TruncSeries> alphas;
  for (std::size_t j = 1; j <= m; ++j) alphas.push_back(c[m - j]);
  return WeierstrassPoly(MonicPoly(std::move(alphas)));
}

NuResult nu(const MonicPoly& p) {
  const std::size_t m = p.degree();
  for (std::size_t j = 1; j <= m; ++j) {
    if (known_nonzero_below(p.alpha(j), static_cast<std::int64_t>(j))) return Lose{};
  }
  std::vector<TruncSeries> out;
  out.reserve(m);
  for (std::size_t j = 1; j <= m; ++j) {
    const auto& a = p.alpha(j);
    if (!a.precision().covers(static_cast<std::int64_t>(j) - 1)) {
      raise(ErrorCode::PrecisionExhausted, "alpha_" + std::to_string(j) + " known to " +
                                               a.precision().to_string() +
                                               " terms; cannot decide divisibility by t^" +
                                               std::to_string(j));
    }
    out.push_back(a.divided_by_t_power(static_cast<std::int64_t>(j)));
  }
  return MonicPoly(std::move(out));
}

MonicPoly taylor_shift(const MonicPoly& q, const Rational& a) {
  const std::size_t m = q.degree();
  std::vector<TruncSeries> alphas;
  alphas.reserve(m);
  for (std::size_t j = 1; j <= m; ++j) {
    const std::size_t k = m - j;
    TruncSeries sum;
    Rational a_power = 1;
    for (std::size_t i = k; i <= m; ++i) {
      sum = sum + Rational(binomial(i, k) * a_power) * q.coefficient_of_x(i);
      a_power *= a;
    }
    alphas.push_back(std::move(sum));
  }
  return MonicPoly(std::move(alphas));
}

TauResult tau(const MonicPoly& q) {
  const std::size_t m = q.degree();
  const auto& a1 = q.alpha(1);
  if (!a1.precision().covers(0)) raise(ErrorCode::PrecisionExhausted, "alpha_1(0) is unknown");
  const Rational shift = -a1.coefficient(0) / Rational(static_cast<unsigned long>(m));
  MonicPoly shifted = taylor_shift(q, shift);
  bool undecided = false;
  for (const auto& s : shifted.alphas()) {
    if (!s.precision().covers(0)) {
      undecided = true;
    } else if (s.coefficient(0) != 0) {
      return Win{};
    }
  }
  if (undecided) raise(ErrorCode::PrecisionExhausted, "constant terms of the shifted polynomial are unknown");
  return TauShift{shift, WeierstrassPoly(std::move(shifted))};
}

MonicPoly base_change(const MonicPoly& p, std::int64_t mu) {
  if (mu < 1) raise(ErrorCode::InvalidArgument, "base change exponent must be >= 1");
  std::vector<TruncSeries> alphas;
  alphas.reserve(p.degree());
  for (const auto& a : p.alphas()) alphas.push_back(a.substitute_power(mu));
  return MonicPoly(std::move(alphas));
}

WeierstrassPoly base_change(const WeierstrassPoly& p, std::int64_t mu) {
  return WeierstrassPoly(base_change(p.poly(), mu));
}

bool is_perfect_power(const WeierstrassPoly& p) {
  const std::size_t m = p.degree();
  const TruncSeries root = Rational(1, static_cast<unsigned long>(m)) * p.alpha(1);
  for (std::size_t j = 2; j <= m; ++j) {
    const TruncSeries expected = binomial(m, j) * root.pow(j);
    const Precision both = min(expected.precision(), p.alpha(j).precision());
    if (!both.covers(0)) {
      raise(ErrorCode::PrecisionExhausted, "no known coefficients to compare for alpha_" + std::to_string(j));
    }
    if (!agree_where_known(expected, p.alpha(j))) return false;
  }
  return true;
}

std::string to_string(StepKind kind) { return kind == StepKind::Nu ? "nu" : "tau"; }

std::string to_string(GameStatus status) {
  switch (status) {
    case GameStatus::Running: return "Running";
    case GameStatus::Win: return "Win";
    case GameStatus::Lose: return "Lose";
    case GameStatus::BudgetExhausted: return "BudgetExhausted";
    case GameStatus::PrecisionExhausted: return "PrecisionExhausted";
  }
  return "Unknown";
}

GameState play_game(const WeierstrassPoly& p, std::int64_t mu, std::uint64_t max_rounds) {
  if (max_rounds < 1) raise(ErrorCode::InvalidArgument, "max_rounds must be >= 1");
  GameState state{base_change(p.poly(), mu), {}, GameStatus::Running, 0};
  std::uint64_t step = 0;
  auto finish = [&](StepKind kind, GameStatus status) {
    state.trace.push_back(GameStep{++step, kind, std::nullopt, status});
    state.status = status;
  };

  for (std::uint64_t round = 1; round <= max_rounds; ++round) {
    try {
      NuResult after_nu = nu(state.current);
      if (std::holds_alternative<Lose>(after_nu)) {
        finish(StepKind::Nu, GameStatus::Lose);
        return state;
      }
      state.current = std::get<MonicPoly>(std::move(after_nu));
      state.trace.push_back(GameStep{++step, StepKind::Nu, std::nullopt, GameStatus::Running});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      finish(StepKind::Nu, GameStatus::PrecisionExhausted);
      return state;
    }

    try {
      TauResult after_tau = tau(state.current);
      state.steps_taken = round;
      if (std::holds_alternative<Win>(after_tau)) {
        finish(StepKind::Tau, GameStatus::Win);
        return state;
      }
      auto& shift = std::get<TauShift>(after_tau);
      state.current = shift.poly.poly();
      state.trace.push_back(GameStep{++step, StepKind::Tau, shift.alpha, GameStatus::Running});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
      finish(StepKind::Tau, GameStatus::PrecisionExhausted);
      return state;
    }
  }
  state.status = GameStatus::BudgetExhausted;
  state.trace.back().status = GameStatus::BudgetExhausted;
  return state;
}

std::uint64_t predicted_win_step(std::span<const TruncSeries> roots) {
  if (roots.empty()) raise(ErrorCode::InvalidArgument, "need at least one root");
  Precision horizon = Precision::exact();
  std::size_t longest = 0;
  for (const auto& r : roots) {
    if (!r.precision().covers(0) || r.coefficient(0) != 0) {
      raise(ErrorCode::InvalidArgument, "roots must vanish at t=0");
    }
    horizon = min(horizon, r.precision());
    longest = std::max(longest, r.coefficients().size());
  }
  for (std::int64_t n = 1;; ++n) {
    if (!horizon.covers(n)) {
      raise(ErrorCode::PrecisionExhausted,
            "roots agree on all " + horizon.to_string() + " known coefficients");
    }
    if (horizon.is_exact() && static_cast<std::size_t>(n) >= longest) {
      raise(ErrorCode::InvalidArgument, "all roots are equal");
    }
    const Rational first = roots[0].coefficient(n);
    for (const auto& r : roots) {
      if (r.coefficient(n) != first) return static_cast<std::uint64_t>(n);
    }
  }
}

std::vector<NewtonSegment> newton_polygon(const WeierstrassPoly& p) {
  struct Point {
    Integer x;
    Integer y;
  };
  std::vector<Point> points{{0, 0}};
  std::vector<Point> unknown;  // (j, P): valuation of alpha_j is >= P
  for (std::size_t j = 1; j <= p.degree(); ++j) {
    const auto& a = p.alpha(j);
    const Integer x(static_cast<unsigned long>(j));
    if (auto v = a.valuation()) {
      points.push_back({x, Integer(static_cast<long>(*v))});
    } else if (!a.precision().is_exact()) {
      unknown.push_back({x, Integer(static_cast<long>(a.precision().terms()))});
    }
  }

  // Monotone chain; collinear middle points are dropped.
  std::vector<Point> hull;
  for (const auto& pt : points) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      const Integer cross = (a.x - o.x) * (pt.y - o.y) - (a.y - o.y) * (pt.x - o.x);
      if (cross > 0) break;
      hull.pop_back();
    }
    hull.push_back(pt);
  }

  for (const auto& u : unknown) {
    if (u.x > hull.back().x) {
      raise(ErrorCode::PrecisionExhausted,
            "valuation of alpha_" + u.x.get_str() + " is unknown and may extend the polygon");
    }
    for (std::size_t s = 1; s < hull.size(); ++s) {
      if (u.x > hull[s].x) continue;
      const auto& l = hull[s - 1];
      const auto& r = hull[s];
      const Rational height =
          Rational(l.y) + Rational(Integer((r.y - l.y) * (u.x - l.x)), Integer(r.x - l.x));
      if (Rational(u.y) < height) {
        raise(ErrorCode::PrecisionExhausted,
              "valuation of alpha_" + u.x.get_str() + " is unknown and may lie below the polygon");
      }
      break;
    }
  }

  std::vector<NewtonSegment> segments;
  for (std::size_t s = 1; s < hull.size(); ++s) {
    const Integer dx = hull[s].x - hull[s - 1].x;
    Rational slope(Integer(hull[s].y - hull[s - 1].y), dx);
    slope.canonicalize();
    segments.push_back({slope, dx.get_ui()});
  }
  return segments;
}

std::optional<std::int64_t> find_mu_search(const WeierstrassPoly& p, std::int64_t mu_max,
                                           std::uint64_t max_rounds) {
  if (mu_max < 1) raise(ErrorCode::InvalidArgument, "mu_max must be >= 1");
  if (is_perfect_power(p)) raise(ErrorCode::PerfectPower, "polynomial is a perfect m-th power");
  for (std::int64_t mu = 1; mu <= mu_max; ++mu) {
    const GameState state = play_game(p, mu, max_rounds);
    if (state.status == GameStatus::Win) return mu;
    if (state.status == GameStatus::PrecisionExhausted) {
      raise(ErrorCode::PrecisionExhausted, "game at mu=" + std::to_string(mu) + " ran out of precision");
    }
  }
  return std::nullopt;
}

}  // namespace severi
