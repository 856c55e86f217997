#include <doctest.h>

#include "test_support.hpp"
#include "zono/rational.hpp"

using namespace zono;
using zono::testing::pt;
using zono::testing::pts;

TEST_CASE("parse_rational accepts integers and fractions in lowest terms") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+2") == Rational(2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(to_string(parse_rational("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational("a"), InputError);
  CHECK_THROWS_AS(parse_rational("1/"), InputError);
}

TEST_CASE("points order lexicographically") {
  CHECK(pt({0, 5}) < pt({1, 0}));
  CHECK(pt({1, 0}) < pt({1, 1}));
  CHECK(pt({1, 1}) == pt({1, 1}));
  CHECK(pt({2, -1}) + pt({-2, 1}) == pt({0, 0}));
  CHECK(-pt({1, -2}) == pt({-1, 2}));
}

TEST_CASE("direction keys identify parallel vectors") {
  CHECK(direction_key(pt({2, 4})) == direction_key(pt({-1, -2})));
  CHECK(direction_key(RationalPoint{Rational(1, 3), Rational(2, 3)}) == direction_key(pt({1, 2})));
  CHECK(direction_key(pt({1, 2})) != direction_key(pt({2, 1})));
  CHECK(orient_positive(pt({0, -3, 1})) == pt({0, 3, -1}));
  CHECK_THROWS_AS(orient_positive(pt({0, 0})), InputError);
}

TEST_CASE("rank and affine dimension") {
  CHECK(rank_of(pts({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})) == 2);
  CHECK(rank_of(pts({{1, 2}, {2, 4}})) == 1);
  CHECK(rank_of(std::vector<RationalPoint>{}) == 0);
  CHECK(affine_dimension(pts({{1, 1}})) == 0);
  CHECK(affine_dimension(pts({{0, 0}, {1, 1}, {2, 2}})) == 1);
  CHECK(affine_dimension(pts({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})) == 2);
}
