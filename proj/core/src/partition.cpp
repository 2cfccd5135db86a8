#include "severi/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "severi/error.hpp"

namespace severi {

namespace {

std::vector<Sublattice2> without_pair(const std::vector<Sublattice2>& parts, std::size_t i,
                                      std::size_t j) {
  std::vector<Sublattice2> rest;
  rest.reserve(parts.size());
  for (std::size_t n = 0; n < parts.size(); ++n) {
    if (n != i && n != j) rest.push_back(parts[n]);
  }
  return rest;
}

void check_pair(const Partition& p, std::size_t i, std::size_t j) {
  if (i >= p.length() || j >= p.length() || i == j) {
    raise(ErrorCode::IndexOutOfRange, "invalid part positions (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ") for a partition of length " +
                                          std::to_string(p.length()));
  }
}

void check_same_shape(const Partition& p1, const Partition& p2) {
  if (p1.length() != p2.length() || p1.degree() != p2.degree()) {
    raise(ErrorCode::ShapeMismatch, "edge test needs equal length and degree: " + p1.to_string() +
                                        " vs " + p2.to_string());
  }
}

// A roof apex with its new term: the remaining parts (sorted) and the sum.
using RoofKey = std::pair<std::vector<Sublattice2>, Sublattice2>;

std::vector<RoofKey> roof_keys(const Partition& p) {
  std::vector<RoofKey> keys;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      keys.emplace_back(without_pair(parts, i, j), join(parts[i], parts[j]));
    }
  }
  return keys;
}

struct DisjointSets {
  std::vector<std::size_t> parent;

  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void choose_parts(const std::vector<Sublattice2>& candidates, std::size_t start,
                  std::uint64_t parts_left, std::uint64_t degree_left,
                  std::vector<Sublattice2>& chosen, std::vector<Partition>& out,
                  std::size_t budget) {
  if (parts_left == 0) {
    if (degree_left == 0 && join_all(chosen).is_whole()) {
      if (out.size() >= budget) {
        raise(ErrorCode::BudgetExceeded,
              "more than " + std::to_string(budget) + " partitions; raise the budget");
      }
      out.emplace_back(chosen);
    }
    return;
  }
  for (std::size_t n = start; n < candidates.size(); ++n) {
    const std::uint64_t idx = candidates[n].index().get_ui();
    // The remaining parts need index at least 1 each.
    if (idx + (parts_left - 1) > degree_left) continue;
    chosen.push_back(candidates[n]);
    choose_parts(candidates, n, parts_left - 1, degree_left - idx, chosen, out, budget);
    chosen.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<Sublattice2> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) raise(ErrorCode::InvalidArgument, "a partition needs at least one part");
  std::sort(parts_.begin(), parts_.end());
  if (!join_all(parts_).is_whole()) {
    raise(ErrorCode::NotSpanning, "parts do not span Z^2: " + to_string());
  }
}

Integer Partition::degree() const {
  Integer total = 0;
  for (const auto& part : parts_) total += part.index();
  return total;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t n = 0; n < parts_.size(); ++n) {
    if (n) s += ",";
    s += parts_[n].to_string();
  }
  return s + "]";
}

std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
  return std::lexicographical_compare_three_way(x.parts_.begin(), x.parts_.end(),
                                                y.parts_.begin(), y.parts_.end());
}

Sublattice2 join_all(const std::vector<Sublattice2>& lattices) {
  if (lattices.empty()) raise(ErrorCode::InvalidArgument, "join of no lattices");
  Sublattice2 acc = lattices.front();
  for (std::size_t n = 1; n < lattices.size() && !acc.is_whole(); ++n) acc = join(acc, lattices[n]);
  return acc;
}

std::vector<Partition> enumerate_partitions(std::uint64_t d, std::uint64_t k, std::size_t budget) {
  if (k < 1) raise(ErrorCode::InvalidArgument, "partition length must be >= 1");
  std::vector<Partition> out;
  if (d < k) return out;
  std::vector<Sublattice2> candidates;
  for (std::uint64_t n = 1; n <= d - k + 1; ++n) {
    auto level = enumerate_by_index(n);
    candidates.insert(candidates.end(), level.begin(), level.end());
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<Sublattice2> chosen;
  choose_parts(candidates, 0, k, d, chosen, out, budget);
  std::sort(out.begin(), out.end());
  return out;
}

Partition witness_partition(std::uint64_t d, std::uint64_t k) {
  if (k < 2 || k > d) {
    raise(ErrorCode::OutOfRange, "witness needs 2 <= k <= d, got d=" + std::to_string(d) +
                                     ", k=" + std::to_string(k));
  }
  std::vector<Sublattice2> parts(k - 1, Sublattice2::whole());
  parts.emplace_back(1, 0, static_cast<unsigned long>(d - k + 1));
  return Partition(std::move(parts));
}

Partition merge_arrow(const Partition& p, std::size_t i, std::size_t j) {
  check_pair(p, i, j);
  auto parts = without_pair(p.parts(), i, j);
  parts.push_back(join(p.parts()[i], p.parts()[j]));
  return Partition(std::move(parts));
}

bool is_edge(const Partition& p1, const Partition& p2) {
  check_same_shape(p1, p2);
  if (p1 == p2) return false;
  const auto& a = p1.parts();
  const auto& b = p2.parts();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Integer sum_a = a[i].index() + a[j].index();
      const Sublattice2 join_a = join(a[i], a[j]);
      const auto rest_a = without_pair(a, i, j);
      for (std::size_t i2 = 0; i2 < b.size(); ++i2) {
        for (std::size_t j2 = i2 + 1; j2 < b.size(); ++j2) {
          if (b[i2].index() + b[j2].index() != sum_a) continue;
          if (join(b[i2], b[j2]) != join_a) continue;
          if (without_pair(b, i2, j2) == rest_a) return true;
        }
      }
    }
  }
  return false;
}

bool is_edge_via_roof(const Partition& p1, const Partition& p2) {
  check_same_shape(p1, p2);
  if (p1 == p2) return false;
  // Apexes reachable from p1, each tagged with the new term of its arrow.
  std::set<std::pair<Partition, Sublattice2>> apexes;
  const auto n = p1.length();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      apexes.emplace(merge_arrow(p1, i, j), join(p1.parts()[i], p1.parts()[j]));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (apexes.contains({merge_arrow(p2, i, j), join(p2.parts()[i], p2.parts()[j])})) return true;
    }
  }
  return false;
}

PartitionGraph partition_graph(std::uint64_t d, std::uint64_t k, std::size_t budget) {
  PartitionGraph graph;
  graph.vertices = enumerate_partitions(d, k, budget);
  std::map<RoofKey, std::vector<std::size_t>> by_apex;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    for (auto& key : roof_keys(graph.vertices[v])) {
      auto& members = by_apex[std::move(key)];
      if (members.empty() || members.back() != v) members.push_back(v);
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [key, members] : by_apex) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) edges.emplace(members[x], members[y]);
    }
  }
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

std::vector<std::vector<Partition>> connected_components(std::uint64_t d, std::uint64_t k,
                                                         std::size_t budget) {
  const auto vertices = enumerate_partitions(d, k, budget);
  DisjointSets sets(vertices.size());
  std::map<RoofKey, std::size_t> first_with_apex;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (auto& key : roof_keys(vertices[v])) {
      auto [it, inserted] = first_with_apex.emplace(std::move(key), v);
      if (!inserted) sets.unite(it->second, v);
    }
  }
  // Vertices are sorted and each root is the smallest member, so grouping in
  // vertex order yields the deterministic component order.
  std::map<std::size_t, std::size_t> slot_of_root;
  std::vector<std::vector<Partition>> components;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    auto [it, inserted] = slot_of_root.emplace(sets.find(v), components.size());
    if (inserted) components.emplace_back();
    components[it->second].push_back(vertices[v]);
  }
  return components;
}

Partition replace_pair_move(const Partition& p, std::size_t i, std::size_t j,
                            const Sublattice2& replacement) {
  check_pair(p, i, j);
  const auto& li = p.parts()[i];
  const auto& lj = p.parts()[j];
  const Sublattice2 sum = join(li, lj);
  if (!contains(sum, replacement)) {
    raise(ErrorCode::InvalidMove, replacement.to_string() + " is not inside " + sum.to_string());
  }
  if (replacement.index() != li.index() + lj.index() - sum.index()) {
    raise(ErrorCode::InvalidMove, replacement.to_string() + " does not have index " +
                                      Integer(li.index() + lj.index() - sum.index()).get_str());
  }
  auto parts = without_pair(p.parts(), i, j);
  parts.push_back(sum);
  parts.push_back(replacement);
  Partition result(std::move(parts));
  if (result == p) raise(ErrorCode::InvalidMove, "move maps " + p.to_string() + " to itself");
  return result;
}

Partition canonical_partition(std::uint64_t d, std::uint64_t k) {
  if (k < 2 || k > d) {
    raise(ErrorCode::OutOfRange, "canonical partition needs 2 <= k <= d, got d=" +
                                     std::to_string(d) + ", k=" + std::to_string(k));
  }
  std::vector<Sublattice2> parts(k - 1, Sublattice2::whole());
  parts.emplace_back(static_cast<unsigned long>(d - k + 1), 0, 1);
  return Partition(std::move(parts));
}

namespace {

// Walks the working parts to the canonical form while `frozen` copies of Z^2
// stay fixed; every move is a replace_pair_move on the full partition.
class PathBuilder {
 public:
  explicit PathBuilder(const Partition& start) : work_(start.parts()) {}

  std::vector<Partition> run() {
    while (work_.size() > 2) {
      reach_whole_part();
      make_rest_span();
      auto it = std::find(work_.begin(), work_.end(), Sublattice2::whole());
      work_.erase(it);
      ++frozen_;
    }
    if (work_.size() == 2) {
      const Integer deg = work_[0].index() + work_[1].index();
      const Sublattice2 target(deg - 1, 0, 1);
      const std::vector<Sublattice2> goal{Sublattice2::whole(), target};
      auto sorted = work_;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != goal) move(0, 1, target);
    }
    return std::move(chain_);
  }

 private:
  Partition full() const {
    std::vector<Sublattice2> parts(frozen_, Sublattice2::whole());
    parts.insert(parts.end(), work_.begin(), work_.end());
    return Partition(std::move(parts));
  }

  std::size_t position_in_full(const Partition& p, const Sublattice2& part, std::size_t skip) const {
    const auto& parts = p.parts();
    for (std::size_t n = 0; n < parts.size(); ++n) {
      if (n != skip && parts[n] == part) return n;
    }
    raise(ErrorCode::InvalidArgument, "part not found");
  }

  // Replaces work_[i], work_[j] by their sum and `replacement`.
  void move(std::size_t i, std::size_t j, const Sublattice2& replacement) {
    const Partition before = full();
    const std::size_t fi = position_in_full(before, work_[i], before.length());
    const std::size_t fj = position_in_full(before, work_[j], fi);
    Partition after = replace_pair_move(before, fi, fj, replacement);
    const Sublattice2 sum = join(work_[i], work_[j]);
    work_[i] = sum;
    work_[j] = replacement;
    chain_.push_back(std::move(after));
  }

  // Lowers the smallest index until some part is Z^2.
  void reach_whole_part() {
    while (std::none_of(work_.begin(), work_.end(), [](const Sublattice2& l) { return l.is_whole(); })) {
      std::size_t lo = 0;
      for (std::size_t n = 1; n < work_.size(); ++n) {
        if (work_[n].index() < work_[lo].index()) lo = n;
      }
      std::size_t other = work_.size();
      for (std::size_t n = 0; n < work_.size(); ++n) {
        if (n != lo && !contains(work_[lo], work_[n])) {
          other = n;
          break;
        }
      }
      // A minimum part containing every other part is the whole sum, i.e. Z^2.
      if (other == work_.size()) raise(ErrorCode::InvalidArgument, "parts do not span");
      const Sublattice2 sum = join(work_[lo], work_[other]);
      const Integer relative = (work_[lo].index() + work_[other].index()) / sum.index() - 1;
      move(lo, other, image_in(sum, Sublattice2(1, 0, relative)));
    }
  }

  // With a Z^2 part present, re-choose two other parts as Z x iZ and jZ x Z so
  // that the parts other than that Z^2 also span.
  void make_rest_span() {
    const auto whole_at = static_cast<std::size_t>(
        std::find(work_.begin(), work_.end(), Sublattice2::whole()) - work_.begin());
    std::vector<std::size_t> rest;
    for (std::size_t n = 0; n < work_.size(); ++n) {
      if (n != whole_at) rest.push_back(n);
    }
    std::vector<Sublattice2> rest_parts;
    for (auto n : rest) rest_parts.push_back(work_[n]);
    if (join_all(rest_parts).is_whole()) return;

    const Sublattice2 first(1, 0, work_[rest[0]].index());
    const Sublattice2 second(work_[rest[1]].index(), 0, 1);
    if (work_[rest[0]] != first) move(whole_at, rest[0], first);
    if (work_[rest[1]] != second) move(whole_at, rest[1], second);
  }

  std::vector<Sublattice2> work_;
  std::size_t frozen_ = 0;
  std::vector<Partition> chain_;
};

}  // namespace

std::vector<Partition> canonical_path(const Partition& p) {
  if (p.length() < 2) {
    raise(ErrorCode::OutOfRange, "canonical path needs length >= 2, got " + std::to_string(p.length()));
  }
  return PathBuilder(p).run();
}

}  // namespace severi
