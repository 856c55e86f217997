#include <doctest.h>

#include <random>

#include "refcheck.hpp"
#include "test_support.hpp"
#include "zono/polygraph.hpp"

using namespace zono;
using zono::testing::pt;
using zono::testing::pts;

TEST_CASE("brute_zonotope_vertices") {
  CHECK(refcheck::brute_zonotope_vertices(testing::square_generators()) == pts({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  CHECK(refcheck::brute_zonotope_vertices(testing::hexagon_generators()) ==
        pts({{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}}));
  CHECK(refcheck::brute_zonotope_vertices(GeneratorSet(3, pts({{1, -2, 3}}))) == pts({{0, 0, 0}, {1, -2, 3}}));
  CHECK(refcheck::brute_zonotope_vertices(GeneratorSet(2)) == pts({{0, 0}}));
}

TEST_CASE("generator cap") {
  std::vector<RationalPoint> many;
  for (long i = 1; i <= 13; ++i) many.push_back(pt({1, i}));
  const auto G = canonicalize(2, many);
  REQUIRE(G.size() == 13);
  CHECK_THROWS_AS(refcheck::brute_zonotope_vertices(G), InputError);
}

TEST_CASE("brute_hull_2d") {
  CHECK(refcheck::brute_hull_2d(pts({{1, 1}, {0, 0}, {2, 0}, {2, 2}, {0, 2}})) ==
        pts({{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
  CHECK(refcheck::brute_hull_2d(pts({{2, 2}, {0, 0}, {1, 1}})) == pts({{0, 0}, {2, 2}}));
  CHECK(refcheck::brute_hull_2d(pts({{3, -1}})) == pts({{3, -1}}));
  CHECK(refcheck::brute_hull_2d(refcheck::subset_sum_cloud(testing::hexagon_generators())) ==
        pts({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}}));
}

TEST_CASE("point cap") {
  std::vector<RationalPoint> many;
  for (long i = 0; i < 513; ++i) many.push_back(pt({i, i * i}));
  CHECK_THROWS_AS(refcheck::brute_hull_2d(many), InputError);
}

TEST_CASE("brute graphs") {
  auto g2 = refcheck::brute_graph_2d(pts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(g2.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto g3 = refcheck::brute_graph_3d(refcheck::subset_sum_cloud(testing::cube_generators()));
  CHECK(g3.vertices.size() == 8);
  CHECK(g3.edges.size() == 12);
  // Square pyramid: 5 vertices, 8 edges.
  auto pyr = refcheck::brute_graph_3d(pts({{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {2, 2, 0}, {1, 1, 1}}));
  CHECK(pyr.vertices.size() == 5);
  CHECK(pyr.edges.size() == 8);
}

TEST_CASE("property: brute hull agrees with hull_vertices in the plane") {
  std::mt19937 rng(73);
  std::uniform_int_distribution<int> coord(-5, 5), count(1, 15);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<RationalPoint> cloud;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) cloud.push_back(pt({coord(rng), coord(rng)}));
    cloud = unique_points(cloud);
    CHECK(testing::sorted(refcheck::brute_hull_2d(cloud)) == hull_vertices(PointSet(2, cloud)));
  }
}
