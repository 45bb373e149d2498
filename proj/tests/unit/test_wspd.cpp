#include <map>
#include <utility>

#include <doctest.h>

#include "support.hpp"
#include "wsp/error.hpp"
#include "wsp/wspd.hpp"

using namespace wsp;

namespace {

// Counts, for every unordered point pair, how many emitted pairs separate it.
std::map<std::pair<std::size_t, std::size_t>, int> coverage(const SplitTree& t,
                                                            const std::vector<WspdPair>& pairs) {
  std::map<std::pair<std::size_t, std::size_t>, int> count;
  for (const auto& p : pairs) {
    for (std::size_t a : t.node(p.a).point_indices) {
      for (std::size_t b : t.node(p.b).point_indices) ++count[{std::min(a, b), std::max(a, b)}];
    }
  }
  return count;
}

}  // namespace

TEST_CASE("separation predicate on hand-evaluated boxes") {
  // Children of the root are the boxes (0,1)x(0,1) and (9,10)x(0,1).
  const auto t = build_split_tree(PointSet({{0, 0}, {1, 1}, {9, 0}, {10, 1}}));
  const auto& root = t.node(t.root());
  REQUIRE(t.node(root.left).rect == Rect{0, 1, 0, 1});
  REQUIRE(t.node(root.right).rect == Rect{9, 10, 0, 1});
  // rho = sqrt(2)/2; 9 - 2 rho = 7.585786..., 10 rho = 7.071..., 11 rho = 7.778...
  CHECK(is_well_separated(t, root.left, root.right, 10.0));
  CHECK_FALSE(is_well_separated(t, root.left, root.right, 11.0));
  CHECK(is_well_separated(t, root.right, root.left, 10.0));
  CHECK_FALSE(is_well_separated(t, root.right, root.left, 11.0));
}

TEST_CASE("two leaves separate for any s") {
  const auto t = build_split_tree(PointSet({{0, 0}, {10, 0}}));
  const auto& root = t.node(t.root());
  for (double s : {0.1, 1.0, 1e6, 1e300}) CHECK(is_well_separated(t, root.left, root.right, s));
}

TEST_CASE("predicate errors") {
  const auto t = build_split_tree(PointSet({{0, 0}, {10, 0}}));
  CHECK_THROWS_AS(is_well_separated(t, 1, 1, 2.0), Error);
  CHECK_THROWS_AS(is_well_separated(t, 1, 9, 2.0), Error);
  CHECK_THROWS_AS(is_well_separated(t, 1, 2, 0.0), Error);
  CHECK_THROWS_AS(compute_wspd(PointSet{}, 2.0), Error);
  CHECK_THROWS_AS(compute_wspd(PointSet({{0, 0}}), -1.0), Error);
}

TEST_CASE("find_pairs emits a leaf against a small cluster") {
  const auto t = build_split_tree(PointSet({{0, 0}, {10, 0}, {10, 1}}));
  const auto& root = t.node(t.root());
  REQUIRE(t.node(root.left).is_leaf());
  const auto pairs = find_pairs(t, root.left, root.right, 1.0);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].a == root.left);
  CHECK(pairs[0].b == root.right);
  // congruent witnesses at rho = 0.5
  CHECK(pairs[0].ball_a == Ball{0, 0, 0.5});
  CHECK(pairs[0].ball_b == Ball{10, 0.5, 0.5});
  CHECK(pairs[0].gap == 10.0);
}

TEST_CASE("find_pairs covers S_v x S_w exactly once") {
  const auto ps = test::random_points(30, 9);
  const auto t = build_split_tree(ps);
  const auto& root = t.node(t.root());
  const auto pairs = find_pairs(t, root.left, root.right, 3.0);
  const auto count = coverage(t, pairs);
  const auto& l = t.node(root.left).point_indices;
  const auto& r = t.node(root.right).point_indices;
  CHECK(count.size() == l.size() * r.size());
  for (const auto& [key, c] : count) CHECK(c == 1);
}

TEST_CASE("compute_wspd small cases") {
  CHECK(compute_wspd(PointSet({{3, 3}}), 2.0).size() == 0);
  const auto w = compute_wspd(PointSet({{0, 0}, {1, 0}}), 2.0);
  REQUIRE(w.size() == 1);
  CHECK(w.tree.node(w.pairs[0].a).is_leaf());
  CHECK(w.tree.node(w.pairs[0].b).is_leaf());
  CHECK(w.pairs[0].ball_a.radius == 0.0);
}

TEST_CASE("random decompositions: coverage, separation, disjointness, symmetry") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const std::size_t n = 2 + seed % 25;
    const auto ps = seed % 3 == 0 ? test::random_lattice_points(n, seed) : test::random_points(n, seed);
    for (double s : {0.5, 1.0, 2.0, 4.0, 10.0}) {
      const auto w = compute_wspd(ps, s);
      const auto count = coverage(w.tree, w.pairs);
      CHECK(count.size() == n * (n - 1) / 2);
      for (const auto& [key, c] : count) CHECK(c == 1);
      for (const auto& p : w.pairs) {
        CHECK(is_well_separated(w.tree, p.a, p.b, s));
        CHECK(is_well_separated(w.tree, p.b, p.a, s));
        const auto& a = w.tree.node(p.a).point_indices;
        const auto& b = w.tree.node(p.b).point_indices;
        std::vector<std::size_t> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        CHECK(both.empty());
        CHECK(p.gap == rect_min_distance(w.tree.node(p.a).rect, w.tree.node(p.b).rect));
      }
    }
  }
}

TEST_CASE("twenty-point sets at s = 2 cover all 190 pairs") {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const auto w = compute_wspd(test::random_points(20, seed), 2.0);
    const auto count = coverage(w.tree, w.pairs);
    CHECK(count.size() == 190);
    for (const auto& [key, c] : count) CHECK(c == 1);
  }
}

TEST_CASE("pair count is nondecreasing in s") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto ps = test::random_points(10 + seed * 3, seed);
    std::size_t prev = 0;
    for (double s : {0.5, 1.0, 2.0, 4.0, 10.0}) {
      const std::size_t m = compute_wspd(ps, s).size();
      CHECK(m >= prev);
      prev = m;
    }
  }
}

TEST_CASE("output order is deterministic") {
  const auto ps = test::random_points(40, 5);
  const auto a = compute_wspd(ps, 2.0);
  const auto b = compute_wspd(ps, 2.0);
  CHECK(a.pairs == b.pairs);
}
