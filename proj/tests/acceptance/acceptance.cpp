// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "severi/cli/commands.hpp"
#include "severi/cli/dot.hpp"
#include "severi/cli/poly_expr.hpp"
#include "severi/error.hpp"
#include "severi/lattice.hpp"
#include "severi/partition.hpp"
#include "severi/symplectic.hpp"
#include "severi/weierstrass.hpp"

using namespace severi;

namespace {

// Collects the first few failure messages of a criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::size_t failures() const { return failures_; }
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<void(Checker&)> body;
};

void c1_census(Checker& c) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const auto got = enumerate_by_index(n).size();
    c.expect(got == oracle::sigma(n), "n=" + std::to_string(n) + " gave " + std::to_string(got));
  }
}

void c2_component_formula(Checker& c) {
  for (std::uint64_t d = 1; d <= 60; ++d) {
    for (std::uint64_t g = 3; g <= d + 1; ++g) {
      const auto direct = enumerate_index_dividing(d, d / (g - 1)).size();
      const Integer formula = count_components_formula(d, g);
      c.expect(formula == direct, "d=" + std::to_string(d) + " g=" + std::to_string(g) + ": " +
                                      formula.get_str() + " vs " + std::to_string(direct));
    }
  }
}

void c3_nonempty(Checker& c) {
  for (std::uint64_t d = 2; d <= 12; ++d) {
    for (std::uint64_t k = 2; k <= d; ++k) {
      const auto w = witness_partition(d, k);
      const bool valid = w.length() == k && w.degree() == d && join_all(w.parts()).is_whole();
      c.expect(valid, "witness (" + std::to_string(d) + "," + std::to_string(k) + ") = " + w.to_string());
    }
  }
}

void c4_connectivity(Checker& c) {
  for (std::uint64_t d = 2; d <= 6; ++d) {
    for (std::uint64_t k = 2; k <= d; ++k) {
      const auto comps = connected_components(d, k);
      c.expect(comps.size() == 1, "Pi_" + std::to_string(d) + "^" + std::to_string(k) + " has " +
                                      std::to_string(comps.size()) + " components");
    }
  }
  gen::Rng rng(20240401);
  gen::PartitionSampler sample(10);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = sample(rng);
    const auto chain = canonical_path(p);
    const Partition* prev = &p;
    bool edges = true;
    for (const auto& q : chain) {
      edges = edges && is_edge(*prev, q);
      prev = &q;
    }
    const auto target = canonical_partition(p.degree().get_ui(), p.length());
    c.expect(edges && *prev == target, "path from " + p.to_string());
  }
}

void c5_edge_equivalence(Checker& c) {
  for (std::uint64_t d = 2; d <= 5; ++d) {
    for (std::uint64_t k = 1; k <= d; ++k) {
      const auto all = enumerate_partitions(d, k);
      for (const auto& x : all) {
        for (const auto& y : all) {
          c.expect(is_edge(x, y) == is_edge_via_roof(x, y), x.to_string() + " vs " + y.to_string());
        }
      }
    }
  }
}

void c6_lemma(Checker& c) {
  for (int d = 1; d <= 6; ++d) {
    for (std::uint64_t k = 1; k <= 4; ++k) {
      const auto r = verify_lemma_equivalence(d, k);
      c.expect(r.equivalent && r.total == oracle::a4_count(k),
               "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                   (r.counterexample ? " counterexample " + r.counterexample->to_string() : ""));
    }
  }
}

void c7_divisibility(Checker& c) {
  gen::Rng rng(7);
  for (int d = 1; d <= 6; ++d) {
    const SymplecticForm1d form(d);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto l = gen::sublattice4(rng, 20);
      c.expect(divisibility_inclusion_check(form, l), "d=" + std::to_string(d) + " L=" + l.to_string());
    }
  }
}

void c8_game_soundness(Checker& c) {
  gen::Rng rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<TruncSeries> alphas;
    for (std::size_t j = 1; j <= m; ++j) {
      const auto low = rng.coin(0.8) ? static_cast<std::int64_t>(j) : 0;
      alphas.push_back(gen::series(gen::poly_coeffs(rng, low, 8)));
    }
    const MonicPoly p(alphas);
    const auto r = nu(p);
    if (const auto* q = std::get_if<MonicPoly>(&r)) {
      for (std::size_t j = 1; j <= m; ++j) {
        c.expect(p.alpha(j) == TruncSeries::monomial(1, static_cast<std::int64_t>(j)) * q->alpha(j),
                 "nu exactness on " + p.to_string());
      }
      const auto t = tau(*q);
      if (const auto* s = std::get_if<TauShift>(&t)) {
        c.expect(oracle::x_coefficients(s->poly.poly()) == oracle::horner_shift(*q, s->alpha),
                 "tau shift on " + q->to_string());
      } else {
        // Win: the re-centred constant terms are not all zero
        const auto shifted = taylor_shift(*q, -q->alpha(1).coefficient(0) / Rational(static_cast<long>(m)));
        bool nonzero = false;
        for (const auto& a : shifted.alphas()) nonzero = nonzero || a.coefficient(0) != 0;
        c.expect(nonzero, "tau Win on " + q->to_string());
      }
    }
  }
}

void c9_eventually(Checker& c) {
  gen::Rng rng(9);
  int constructed = 0;
  while (constructed < 500) {
    const auto m = static_cast<std::size_t>(rng.uniform(2, 4));
    const auto roots = gen::root_coeffs(rng, m);
    const auto n = oracle::first_disagreement(roots);
    if (n == 0) continue;
    ++constructed;
    const auto series = gen::as_series(roots);
    const auto state = play_game(from_roots(series), 1, 64);
    const bool agree = state.status == GameStatus::Win && state.steps_taken == predicted_win_step(series) &&
                       state.steps_taken == n;
    std::string roots_text;
    for (const auto& r : series) roots_text += "[" + r.to_string() + "]";
    if (!agree) {
      std::cerr << "discrepancy: roots " << roots_text << " status " << to_string(state.status) << " after "
                << state.steps_taken << " rounds, predicted " << n << "\n";
    }
    c.expect(agree, "roots " + roots_text);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = static_cast<std::size_t>(rng.uniform(2, 4));
    const auto phi = gen::series(gen::poly_coeffs(rng, 1, 6, 3));
    const std::vector<TruncSeries> roots(m, phi);
    const auto p = from_roots(roots);
    const auto mu = rng.uniform(1, 3);
    const auto exact = play_game(p, mu, 64);
    c.expect(exact.status == GameStatus::BudgetExhausted, "perfect power (exact) " + p.to_string());
    const auto truncated = play_game(WeierstrassPoly(p.poly().truncated(Precision::finite(kDefaultPrecisionTerms))), mu, 64);
    c.expect(truncated.status == GameStatus::BudgetExhausted || truncated.status == GameStatus::PrecisionExhausted,
             "perfect power (P=64) " + p.to_string());
  }
}

void c10_micro(Checker& c) {
  const auto p = cli::parse_poly("x^2 - t");
  c.expect(play_game(p, 1).status == GameStatus::Lose, "x^2 - t, mu=1");
  c.expect(play_game(p, 2).status == GameStatus::Win, "x^2 - t, mu=2");
  c.expect(newton_polygon(p) == std::vector<NewtonSegment>{{Rational(1, 2), 2}}, "polygon of x^2 - t");
}

void c11_cli(Checker& c) {
  const std::filesystem::path data(SEVERI_TEST_DATA_DIR);
  std::ifstream corpus(data / "corpus" / "poly_corpus.txt");
  int expressions = 0;
  for (std::string line; std::getline(corpus, line);) {
    if (line.empty() || line[0] == '#') continue;
    ++expressions;
    const auto poly = cli::evaluate(cli::parse_expression(line));
    const auto printed = cli::print_normalized(poly);
    const auto again = cli::evaluate(cli::parse_expression(printed));
    c.expect(again == poly && cli::print_normalized(again) == printed, "round trip of " + line);
  }
  c.expect(expressions >= 50, "corpus has " + std::to_string(expressions) + " expressions");

  std::ifstream golden(data / "golden" / "pi_4_2.dot", std::ios::binary);
  const std::string expected{std::istreambuf_iterator<char>(golden), std::istreambuf_iterator<char>()};
  const auto first = cli::export_dot(partition_graph(4, 2));
  c.expect(first == expected, "DOT for Pi_4^2 differs from the golden file");
  c.expect(first == cli::export_dot(partition_graph(4, 2)), "DOT for Pi_4^2 differs between runs");

  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"lat", "count", "--d", "4", "--g", "3"}, cli::kExitOk},
      {{"part", "connected", "--d", "4", "--k", "2"}, cli::kExitOk},
      {{"game", "play", "--poly", "x^2 - t", "--mu", "1"}, cli::kExitOk},
      {{"--help"}, cli::kExitOk},
      {{"lat", "count", "--d", "4", "--g", "2"}, cli::kExitDomainError},
      {{"game", "play", "--poly", "x^2 -", "--mu", "1"}, cli::kExitDomainError},
      {{"game", "findmu", "--poly", "(x - t)^2", "--mu-max", "2"}, cli::kExitDomainError},
      {{}, cli::kExitUsageError},
      {{"lat", "enum"}, cli::kExitUsageError},
      {{"game", "play", "--mu", "1"}, cli::kExitUsageError},
      {{"part", "enum", "--d", "x", "--k", "2"}, cli::kExitUsageError},
  };
  for (const auto& k : cases) {
    std::ostringstream out, err;
    const int code = cli::dispatch(k.args, out, err);
    std::string joined;
    for (const auto& a : k.args) joined += a + " ";
    c.expect(code == k.code, "exit " + std::to_string(code) + " for: " + joined);
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sublattice census |L(n)| = sigma(n), n <= 500", 1.0, c1_census},
      {2, "component-count formula vs enumeration, d <= 60", 5.0, c2_component_formula},
      {3, "witness partitions, 2 <= k <= d <= 12", 1.0, c3_nonempty},
      {4, "connectivity d <= 6 and 1000 canonical paths", 300.0, c4_connectivity},
      {5, "is_edge == is_edge_via_roof, d <= 5", 60.0, c5_edge_equivalence},
      {6, "isogeny lemma d <= 6, k <= 4", 120.0, c6_lemma},
      {7, "divisibility inclusion, 1000 lattices per d <= 6", 60.0, c7_divisibility},
      {8, "nu exactness and tau shift, 1000 polynomials", 60.0, c8_game_soundness},
      {9, "game wins at the predicted round; perfect powers never win", 60.0, c9_eventually},
      {10, "worked micro-cases", 1.0, c10_micro},
      {11, "CLI round trip, DOT stability, exit codes", 1.0, c11_cli},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    std::string crash;
    try {
      criterion.body(checker);
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= criterion.limit_seconds;
    const bool pass = checker.ok() && crash.empty() && in_time;
    if (!pass) ++failed;
    std::printf("[%s] %2d %s (%.3fs, limit %.0fs)\n", pass ? "PASS" : "FAIL", criterion.number,
                criterion.name.c_str(), seconds, criterion.limit_seconds);
    if (!crash.empty()) std::printf("       exception: %s\n", crash.c_str());
    if (!in_time) std::printf("       over the time limit\n");
    for (const auto& m : checker.messages()) std::printf("       %s\n", m.c_str());
    if (checker.failures() > checker.messages().size()) {
      std::printf("       ... %zu failures in total\n", checker.failures());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
