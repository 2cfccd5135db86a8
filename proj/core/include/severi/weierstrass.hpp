#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "severi/series.hpp"

namespace severi {

inline constexpr std::int64_t kDefaultPrecisionTerms = 64;
inline constexpr std::uint64_t kDefaultMaxRounds = 64;

/// x^m + alpha_1(t) x^{m-1} + ... + alpha_m(t) with truncated series coefficients.
class MonicPoly {
 public:
  /// Throws InvalidArgument when `alphas` is empty (degree must be >= 1).
  explicit MonicPoly(std::vector<TruncSeries> alphas);

  std::size_t degree() const noexcept { return alphas_.size(); }
  /// alpha_j for 1 <= j <= m, the coefficient of x^{m-j}.
  const TruncSeries& alpha(std::size_t j) const { return alphas_.at(j - 1); }
  const std::vector<TruncSeries>& alphas() const noexcept { return alphas_; }

  /// Coefficient of x^i for 0 <= i <= m (the leading one is exactly 1).
  TruncSeries coefficient_of_x(std::size_t i) const;

  MonicPoly truncated(Precision precision) const;

  /// Smallest precision among the coefficients.
  Precision precision() const;

  friend bool operator==(const MonicPoly&, const MonicPoly&) = default;

  std::string to_string() const;

 private:
  std::vector<TruncSeries> alphas_;
};

/// A monic polynomial in W_m: every alpha_j vanishes at t = 0.
class WeierstrassPoly {
 public:
  /// Throws NotInWm if some alpha_j(0) != 0, PrecisionExhausted if some
  /// alpha_j(0) is unknown.
  explicit WeierstrassPoly(MonicPoly poly);

  const MonicPoly& poly() const noexcept { return poly_; }
  std::size_t degree() const noexcept { return poly_.degree(); }
  const TruncSeries& alpha(std::size_t j) const { return poly_.alpha(j); }

  friend bool operator==(const WeierstrassPoly&, const WeierstrassPoly&) = default;
  std::string to_string() const { return poly_.to_string(); }

 private:
  MonicPoly poly_;
};

struct Lose {
  friend bool operator==(Lose, Lose) { return true; }
};
struct Win {
  friend bool operator==(Win, Win) { return true; }
};

struct TauShift {
  Rational alpha;
  WeierstrassPoly poly;
};

using NuResult = std::variant<MonicPoly, Lose>;
using TauResult = std::variant<TauShift, Win>;

/// prod_i (x - root_i). Roots must vanish at t = 0: NotInWm if a constant
/// term is nonzero, PrecisionExhausted if it is unknown.
WeierstrassPoly from_roots(std::span<const TruncSeries> roots);

/// t^{-m} p(t, t x), or Lose when some alpha_j has valuation < j.
/// Throws PrecisionExhausted when integrality cannot be decided.
NuResult nu(const MonicPoly& p);

/// q(t, x + a) for constant a.
MonicPoly taylor_shift(const MonicPoly& q, const Rational& a);

/// Re-centres q into W_m with the unique candidate a = -alpha_1(0)/m, or Win
/// when q(0, x + a) != x^m. Throws PrecisionExhausted on unknown constant terms.
TauResult tau(const MonicPoly& q);

/// p(t^mu, x).
MonicPoly base_change(const MonicPoly& p, std::int64_t mu);
WeierstrassPoly base_change(const WeierstrassPoly& p, std::int64_t mu);

/// p == (x + alpha_1/m)^m on every coefficient both sides know.
bool is_perfect_power(const WeierstrassPoly& p);

enum class StepKind { Nu, Tau };
enum class GameStatus { Running, Win, Lose, BudgetExhausted, PrecisionExhausted };

std::string to_string(StepKind kind);
std::string to_string(GameStatus status);

struct GameStep {
  std::uint64_t step = 0;
  StepKind kind = StepKind::Nu;
  /// Shift applied by a successful tau.
  std::optional<Rational> alpha;
  GameStatus status = GameStatus::Running;
};

struct GameState {
  MonicPoly current;
  std::vector<GameStep> trace;
  GameStatus status = GameStatus::Running;
  /// Rounds (nu followed by tau) carried out, including one that ends in Win.
  std::uint64_t steps_taken = 0;
};

/// Plays r = p(t^mu, x), nu(r), tau(nu(r)), ... for at most max_rounds rounds.
GameState play_game(const WeierstrassPoly& p, std::int64_t mu,
                    std::uint64_t max_rounds = kDefaultMaxRounds);

/// Smallest N >= 1 such that the t^N coefficients of the roots are not all
/// equal. Throws PrecisionExhausted if the roots agree on every known
/// coefficient, InvalidArgument if they are exactly equal.
std::uint64_t predicted_win_step(std::span<const TruncSeries> roots);

struct NewtonSegment {
  Rational slope;
  std::uint64_t length = 0;
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower convex hull of (0,0) and (j, val alpha_j) for nonzero alpha_j, as
/// segments left to right. Throws PrecisionExhausted if an unknown valuation
/// could change the hull.
std::vector<NewtonSegment> newton_polygon(const WeierstrassPoly& p);

/// Smallest mu <= mu_max for which play_game wins. Throws PerfectPower if p is
/// a perfect m-th power and PrecisionExhausted if some game before the first
/// win ran out of precision.
std::optional<std::int64_t> find_mu_search(const WeierstrassPoly& p, std::int64_t mu_max,
                                           std::uint64_t max_rounds = kDefaultMaxRounds);

}  // namespace severi
