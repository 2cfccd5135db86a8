#include <algorithm>
#include <set>

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "severi/error.hpp"
#include "severi/partition.hpp"

using namespace severi;

namespace {

const Sublattice2 Z2 = Sublattice2::whole();

Partition P(std::vector<Sublattice2> parts) { return Partition(std::move(parts)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected severi::Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("Partition invariants") {
  const auto p = P({Sublattice2(1, 0, 2), Sublattice2(2, 0, 1)});
  CHECK(p.degree() == 4);
  CHECK(p.length() == 2);
  CHECK(p == P({Sublattice2(2, 0, 1), Sublattice2(1, 0, 2)}));
  CHECK(p.to_string() == "[(1,0,2),(2,0,1)]");
  CHECK(code_of([] { P({}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { P({Sublattice2(2, 0, 1), Sublattice2(2, 0, 1)}); }) == ErrorCode::NotSpanning);
}

TEST_CASE("enumerate_partitions") {
  CHECK(enumerate_partitions(2, 2) == std::vector<Partition>{P({Z2, Z2})});
  CHECK(enumerate_partitions(4, 2).size() == 7);
  CHECK(enumerate_partitions(1, 2).empty());
  // length one only spans for d = 1
  CHECK(enumerate_partitions(1, 1) == std::vector<Partition>{P({Z2})});
  for (std::uint64_t d = 2; d <= 6; ++d) CHECK(enumerate_partitions(d, 1).empty());
  CHECK(enumerate_partitions(3, 4).empty());
  CHECK(code_of([] { enumerate_partitions(10, 3, 10); }) == ErrorCode::BudgetExceeded);

  for (std::uint64_t d = 1; d <= 7; ++d) {
    for (std::uint64_t k = 1; k <= d + 1; ++k) {
      const auto all = enumerate_partitions(d, k);
      CHECK(all == oracle::partitions_by_index_multisets(d, k));
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (const auto& p : all) {
        CHECK(p.degree() == d);
        CHECK(join_all(p.parts()).is_whole());
      }
      if (k >= 2) CHECK(all.empty() == (k > d));
    }
  }
}

TEST_CASE("witness_partition") {
  CHECK(witness_partition(5, 3) == P({Z2, Z2, Sublattice2(1, 0, 3)}));
  CHECK(witness_partition(2, 2) == P({Z2, Z2}));
  CHECK(code_of([] { witness_partition(3, 4); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { witness_partition(3, 1); }) == ErrorCode::OutOfRange);
}

TEST_CASE("merge_arrow") {
  CHECK(merge_arrow(P({Sublattice2(2, 0, 1), Sublattice2(1, 0, 2)}), 0, 1) == P({Z2}));
  CHECK(merge_arrow(P({Z2, Sublattice2(2, 1, 3)}), 0, 1) == P({Z2}));
  const auto l = Sublattice2(2, 1, 1);
  CHECK(merge_arrow(P({Z2, l, l}), 1, 2) == P({Z2, l}));
  CHECK(code_of([] { merge_arrow(P({Z2, Z2}), 0, 2); }) == ErrorCode::IndexOutOfRange);
  CHECK(code_of([] { merge_arrow(P({Z2, Z2}), 1, 1); }) == ErrorCode::IndexOutOfRange);

  gen::Rng rng(4);
  gen::PartitionSampler sample(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = sample(rng);
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.length()) - 2));
    const auto q = merge_arrow(p, i, i + 1);
    CHECK(q.length() == p.length() - 1);
    CHECK(join_all(q.parts()).is_whole());
  }
}

TEST_CASE("is_edge examples") {
  const auto p1 = P({Sublattice2(2, 0, 1), Sublattice2(1, 0, 2)});
  const auto p2 = P({Sublattice2(2, 1, 1), Sublattice2(1, 0, 2)});
  CHECK(is_edge(p1, p2));
  CHECK(is_edge_via_roof(p1, p2));
  CHECK_FALSE(is_edge(p1, p1));
  CHECK_FALSE(is_edge_via_roof(p1, p1));
  // every pair in Pi_4^2 shares the roof {Z^2}
  CHECK(is_edge(P({Z2, Sublattice2(1, 0, 3)}), P({Sublattice2(2, 0, 1), Sublattice2(2, 1, 1)})));
  CHECK(code_of([&] { is_edge(p1, P({Z2, Z2})); }) == ErrorCode::ShapeMismatch);
  CHECK(code_of([&] { is_edge(p1, P({Z2, Z2, Sublattice2(1, 0, 2)})); }) == ErrorCode::ShapeMismatch);
  // replacing a pair must keep the other parts
  CHECK_FALSE(
      is_edge(P({Z2, Z2, Sublattice2(1, 0, 4)}), P({Sublattice2(1, 0, 2), Sublattice2(2, 0, 1), Sublattice2(2, 1, 1)})));
}

TEST_CASE("is_edge agrees with is_edge_via_roof") {
  for (std::uint64_t d = 2; d <= 5; ++d) {
    for (std::uint64_t k = 2; k <= d; ++k) {
      const auto all = enumerate_partitions(d, k);
      for (const auto& x : all)
        for (const auto& y : all) CHECK(is_edge(x, y) == is_edge_via_roof(x, y));
    }
  }
}

TEST_CASE("partition_graph and components") {
  const auto g = partition_graph(4, 2);
  CHECK(g.vertices.size() == 7);
  CHECK(g.edges.size() == 21);
  CHECK(std::is_sorted(g.edges.begin(), g.edges.end()));
  for (const auto& [i, j] : g.edges) CHECK(i < j);

  const auto c42 = connected_components(4, 2);
  REQUIRE(c42.size() == 1);
  CHECK(c42[0].size() == 7);
  const auto c22 = connected_components(2, 2);
  REQUIRE(c22.size() == 1);
  CHECK(c22[0].size() == 1);
  CHECK(connected_components(6, 2).size() == 1);
  CHECK(connected_components(3, 4).empty());

  for (std::uint64_t d = 2; d <= 6; ++d) {
    for (std::uint64_t k = 2; k <= d; ++k) {
      const auto graph = partition_graph(d, k);
      std::set<std::pair<std::size_t, std::size_t>> expected;
      for (std::size_t i = 0; i < graph.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < graph.vertices.size(); ++j)
          if (is_edge(graph.vertices[i], graph.vertices[j])) expected.insert({i, j});
      CHECK(std::set<std::pair<std::size_t, std::size_t>>(graph.edges.begin(), graph.edges.end()) == expected);
      CHECK(oracle::components_by_bfs(graph.vertices) == 1);
      CHECK(connected_components(d, k).size() == 1);
    }
  }
}

TEST_CASE("replace_pair_move") {
  const auto p = P({Sublattice2(2, 0, 1), Sublattice2(1, 0, 2)});
  for (const auto& l : enumerate_by_index(3)) {
    const auto q = replace_pair_move(p, 0, 1, l);
    CHECK(q == P({Z2, l}));
    CHECK(is_edge(p, q));
  }
  const auto r = P({Z2, Sublattice2(1, 0, 3)});
  CHECK(code_of([&] { replace_pair_move(r, 0, 1, Sublattice2(1, 0, 3)); }) == ErrorCode::InvalidMove);
  CHECK(code_of([&] { replace_pair_move(p, 0, 1, Sublattice2(1, 0, 2)); }) == ErrorCode::InvalidMove);
  CHECK(code_of([&] { replace_pair_move(p, 0, 3, Sublattice2(1, 0, 3)); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("canonical_path") {
  CHECK(canonical_partition(5, 3) == P({Z2, Z2, Sublattice2(3, 0, 1)}));
  CHECK(canonical_path(canonical_partition(5, 3)).empty());
  const auto w = witness_partition(5, 3);
  const auto chain = canonical_path(w);
  REQUIRE(chain.size() >= 1);
  CHECK(chain.back() == canonical_partition(5, 3));
  CHECK(is_edge(w, chain.front()));
  CHECK(code_of([] { canonical_path(P({Z2})); }) == ErrorCode::OutOfRange);

  gen::Rng rng(99);
  gen::PartitionSampler sample(10);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = sample(rng);
    const auto path = canonical_path(p);
    const Partition* prev = &p;
    for (const auto& q : path) {
      CHECK(is_edge(*prev, q));
      prev = &q;
    }
    CHECK(*prev == canonical_partition(static_cast<std::uint64_t>(p.degree().get_ui()), p.length()));
  }

  // a walk between two arbitrary vertices through the shared endpoint
  const auto a = P({Sublattice2(2, 0, 1), Sublattice2(2, 1, 1), Sublattice2(1, 0, 2)});
  const auto b = P({Z2, Sublattice2(1, 0, 2), Sublattice2(1, 0, 3)});
  auto walk = canonical_path(a);
  auto back = canonical_path(b);
  std::reverse(back.begin(), back.end());
  if (!back.empty()) back.erase(back.begin());
  back.push_back(b);
  walk.insert(walk.end(), back.begin(), back.end());
  const Partition* prev = &a;
  for (const auto& q : walk) {
    CHECK(is_edge(*prev, q));
    prev = &q;
  }
  CHECK(*prev == b);
}
