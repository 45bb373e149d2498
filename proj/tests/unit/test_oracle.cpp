#include <doctest.h>

#include "support.hpp"
#include "wsp/oracle.hpp"

using namespace wsp;
using namespace wsp::oracle;

TEST_CASE("brute closest pair") {
  CHECK(brute_closest_pair(PointSet({{0, 0}, {1, 0}})) == IndexPair{0, 1, 1.0});
  CHECK(brute_closest_pair(PointSet({{0, 0}, {2, 0}, {3, 0}})) == IndexPair{1, 2, 1.0});
  CHECK(brute_closest_pair(PointSet({{0, 0}, {1, 0}, {2, 0}})) == IndexPair{0, 1, 1.0});
  CHECK_THROWS(brute_closest_pair(PointSet({{0, 0}})));
}

TEST_CASE("brute k closest") {
  const PointSet line({{0, 0}, {1, 0}, {3, 0}});
  const auto all = brute_k_closest(line, 3);
  REQUIRE(all.size() == 3);
  CHECK(all[0] == IndexPair{0, 1, 1.0});
  CHECK(all[1] == IndexPair{1, 2, 2.0});
  CHECK(all[2] == IndexPair{0, 2, 3.0});
  const auto ps = test::random_points(15, 8);
  CHECK(brute_k_closest(ps, 1)[0] == brute_closest_pair(ps));
  CHECK_THROWS(brute_k_closest(ps, 0));
  CHECK_THROWS(brute_k_closest(ps, 106));
}

TEST_CASE("brute all nearest neighbours") {
  CHECK(brute_ann(PointSet({{0, 0}, {1, 0}})) == NeighborMap{1, 0});
  CHECK(brute_ann(PointSet({{0, 0}, {1, 0}, {10, 0}})) == NeighborMap{1, 0, 1});
  // Square corners in order (0,0), (1,0), (1,1), (0,1): side-adjacent wins,
  // smaller index on ties.
  CHECK(brute_ann(PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) == NeighborMap{1, 0, 1, 0});
}

TEST_CASE("brute EMST") {
  const auto two = brute_emst(PointSet({{0, 0}, {2, 0}}));
  CHECK(two.edges().size() == 1);
  CHECK(two.weight() == 2.0);

  const auto line = brute_emst(PointSet({{0, 0}, {1, 0}, {3, 0}}));
  CHECK(line.weight() == 3.0);
  CHECK(line.graph().has_edge(0, 1));
  CHECK(line.graph().has_edge(1, 2));

  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto ps = test::random_points(2 + seed % 8, seed);
    Graph complete(ps);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      for (std::size_t j = i + 1; j < ps.size(); ++j) complete.add_edge(i, j);
    }
    CHECK(brute_emst(ps).weight() == doctest::Approx(exhaustive_mst_weight(complete)).epsilon(1e-12));
  }
}

TEST_CASE("exhaustive enumeration on tiny graphs") {
  const PointSet tri({{0, 0}, {1, 0}, {3, 0}});
  Graph g(tri);
  g.add_edge(0, 1);
  CHECK(std::isinf(exhaustive_mst_weight(g)));
  g.add_edge(0, 2);
  CHECK(exhaustive_mst_weight(g) == 4.0);
  g.add_edge(1, 2);
  CHECK(exhaustive_mst_weight(g) == 3.0);
}

TEST_CASE("check_wspd accepts real decompositions") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto w = compute_wspd(test::random_points(5 + seed * 4, seed), 2.0);
    const auto report = check_wspd(w);
    CHECK(report.valid());
    CHECK(report.separated.size() == w.size());
  }
}

TEST_CASE("check_wspd sees a deleted pair") {
  const auto w = compute_wspd(test::random_points(25, 3), 2.0);
  // Pick a pair with more than one point on some side.
  std::size_t victim = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.tree.node(w.pairs[i].a).size() * w.tree.node(w.pairs[i].b).size() > 1) victim = i;
  }
  auto pairs = w.pairs;
  const auto removed = pairs[victim];
  pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(victim));
  const auto report = check_wspd(w.tree, w.s, pairs);
  CHECK_FALSE(report.valid());
  const std::size_t expected = w.tree.node(removed.a).size() * w.tree.node(removed.b).size();
  CHECK(report.uncovered == expected);
  CHECK(report.overcovered == 0);
  for (std::size_t a : w.tree.node(removed.a).point_indices) {
    for (std::size_t b : w.tree.node(removed.b).point_indices) CHECK(report.count(a, b) == 0);
  }
}

TEST_CASE("check_wspd sees a duplicated pair") {
  const auto w = compute_wspd(test::random_points(25, 4), 2.0);
  auto pairs = w.pairs;
  pairs.push_back(pairs.front());
  const auto report = check_wspd(w.tree, w.s, pairs);
  CHECK_FALSE(report.valid());
  const auto& a = w.tree.node(pairs.front().a).point_indices;
  const auto& b = w.tree.node(pairs.front().b).point_indices;
  CHECK(report.overcovered == a.size() * b.size());
  for (std::size_t p : a) {
    for (std::size_t q : b) CHECK(report.count(p, q) == 2);
  }
}

TEST_CASE("check_wspd flags pairs that are not separated") {
  const auto w = compute_wspd(test::random_points(25, 5), 1.0);
  const auto report = check_wspd(w.tree, 1e6, w.pairs);
  CHECK(report.not_separated > 0);
  CHECK_FALSE(report.valid());
}
