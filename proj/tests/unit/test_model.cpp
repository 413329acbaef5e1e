#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "strokelink/error.hpp"
#include "strokelink/model.hpp"

using namespace strokelink;
using testing::S;

TEST_SUITE("model") {
  TEST_CASE("concat_strokes examples") {
    const Stroke a = S({{0, 0}, {1, 1}});
    CHECK(concat_strokes(std::vector{a}) == a);

    const auto two = concat_strokes(std::vector{S({{0, 0}, {1, 0}}), S({{5, 5}, {6, 5}})});
    CHECK(two == S({{0, 0}, {1, 0}, {5, 5}, {6, 5}}));

    const std::vector three{S({{1, 1}, {1, 2}}), S({{2, 1}, {2, 2}}), S({{3, 1}, {3, 2}})};
    const auto c = concat_strokes(three);
    REQUIRE(c.size() == 6);
    CHECK(c.front() == Point{1, 1});
    CHECK(c.back() == Point{3, 2});
  }

  TEST_CASE("concat_strokes rejects empty input") {
    CHECK_THROWS_WITH_AS(concat_strokes(std::vector<Stroke>{}), "empty concatenation", Error);
  }

  TEST_CASE("concat is associative and length additive") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = testing::random_stroke(rng, 1, 6);
      const auto b = testing::random_stroke(rng, 1, 6);
      const auto c = testing::random_stroke(rng, 1, 6);
      const auto ab = concat_strokes(std::vector{a, b});
      CHECK(concat_strokes(std::vector{ab, c}) == concat_strokes(std::vector{a, b, c}));
      CHECK(concat_strokes(std::vector{a, b, c}).size() == a.size() + b.size() + c.size());
    }
  }

  TEST_CASE("candidate ordering breaks score ties by label") {
    CHECK(candidate_less({"b", 1.0}, {"a", 2.0}));
    CHECK(candidate_less({"a", 1.0}, {"b", 1.0}));
    CHECK_FALSE(candidate_less({"b", 1.0}, {"a", 1.0}));
  }
}
