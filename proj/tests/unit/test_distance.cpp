#include <doctest.h>

#include <cstdlib>
#include <random>

#include "helpers.hpp"
#include "strokelink/distance.hpp"
#include "strokelink/error.hpp"

using namespace strokelink;
using testing::S;

namespace {

// 1-based formula evaluation, kept separate from the library's indexing.
std::size_t j_oracle(std::size_t i1, std::size_t n, std::size_t m) { return (n - 1) * (i1 - 1) / (m - 1) + 1; }

double whole_whole_oracle(const Stroke& a, const Stroke& b) {
  const Stroke& s = a.size() >= b.size() ? a : b;
  const Stroke& t = a.size() >= b.size() ? b : a;
  const std::size_t n = s.size(), m = t.size();
  double sum = 0;
  for (std::size_t i = 1; i <= m; ++i) {
    const Point p = s.points[j_oracle(i, n, m) - 1], q = t.points[i - 1];
    sum += std::abs(p.x - q.x) + std::abs(p.y - q.y);
  }
  return sum / m;
}

double directional_oracle(const Stroke& a, const Stroke& b) {
  const Stroke& s = a.size() >= b.size() ? a : b;
  const Stroke& t = a.size() >= b.size() ? b : a;
  const std::size_t n = s.size(), m = t.size();
  double sum = 0;
  for (std::size_t i = 2; i <= m; ++i) {
    const Point p1 = s.points[j_oracle(i, n, m) - 1], p0 = s.points[j_oracle(i - 1, n, m) - 1];
    const Point q1 = t.points[i - 1], q0 = t.points[i - 2];
    sum += std::abs((p1.x - p0.x) - (q1.x - q0.x)) + std::abs((p1.y - p0.y) - (q1.y - q0.y));
  }
  return sum / m;
}

Stroke translate(Stroke s, int dx, int dy) {
  for (auto& p : s.points) p = {p.x + dx, p.y + dy};
  return s;
}

const StrokeDistanceKind kAll[] = {StrokeDistanceKind::Endpoint, StrokeDistanceKind::Initial,
                                   StrokeDistanceKind::WholeWhole, StrokeDistanceKind::Directional};

}  // namespace

TEST_SUITE("distance") {
  TEST_CASE("resample_index examples") {
    CHECK(resample_index(0, 5, 3) == 0);
    CHECK(resample_index(2, 5, 3) == 4);
    CHECK(resample_index(1, 4, 3) == 1);
    CHECK(resample_index(2, 4, 3) == 3);
    CHECK_THROWS_AS(resample_index(0, 5, 1), Error);
    CHECK_THROWS_AS(resample_index(0, 2, 3), Error);
  }

  TEST_CASE("resample_index hits both ends and is monotone") {
    for (std::size_t m = 2; m < 30; ++m)
      for (std::size_t n = m; n < 60; ++n) {
        CHECK(resample_index(0, n, m) == 0);
        CHECK(resample_index(m - 1, n, m) == n - 1);
        for (std::size_t i = 1; i < m; ++i) CHECK(resample_index(i, n, m) > resample_index(i - 1, n, m));
      }
  }

  TEST_CASE("d_endpoint examples") {
    const auto s = S({{0, 0}, {10, 0}});
    CHECK(d_endpoint(s, s) == 0);
    CHECK(d_endpoint(s, S({{3, 4}, {10, 2}})) == 9);
    CHECK(d_endpoint(S({{5, 5}}), S({{6, 7}})) == 6);
  }

  TEST_CASE("d_initial examples") {
    const auto s = S({{0, 0}, {2, 0}, {4, 0}, {6, 0}});
    const auto t = S({{0, 0}, {2, 2}});
    CHECK(d_initial(s, s) == 0);
    CHECK(d_initial(s, t) == 4);
    CHECK(d_initial(t, s) == 4);
  }

  TEST_CASE("d_whole_whole examples") {
    const auto s = S({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}});
    CHECK(d_whole_whole(s, s) == 0);
    CHECK(d_whole_whole(s, S({{0, 2}, {2, 2}, {4, 2}})) == 2);
    CHECK(d_whole_whole(s, translate(s, 7, 0)) == 7);
  }

  TEST_CASE("d_directional examples") {
    const auto right = S({{0, 0}, {4, 0}, {8, 0}});
    const auto down = S({{0, 0}, {0, 4}, {0, 8}});
    CHECK(d_directional(right, right) == 0);
    CHECK(d_directional(right, translate(right, -13, 40)) == 0);
    // two difference vectors, each 8 apart in Manhattan terms, over m = 3
    CHECK(d_directional(right, down) == doctest::Approx(16.0 / 3.0));
  }

  TEST_CASE("mirrored sweep: same endpoints, different direction") {
    const auto down_first = S({{0, 0}, {0, 10}, {0, 20}, {10, 20}, {20, 20}});
    const auto right_first = S({{0, 0}, {10, 0}, {20, 0}, {20, 10}, {20, 20}});
    CHECK(d_endpoint(down_first, right_first) == 0);
    CHECK(d_directional(down_first, right_first) > 0);
  }

  TEST_CASE("whole-whole and directional match the formula oracle") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 500; ++trial) {
      const auto s = testing::random_stroke(rng, 2, 20);
      const auto t = testing::random_stroke(rng, 2, 20);
      CHECK(d_whole_whole(s, t) == doctest::Approx(whole_whole_oracle(s, t)));
      CHECK(d_directional(s, t) == doctest::Approx(directional_oracle(s, t)));
    }
  }

  TEST_CASE("properties over random pairs") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<int> off(-300, 300);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto s = testing::random_stroke(rng, 2, 16);
      const auto t = testing::random_stroke(rng, 2, 16);
      for (auto kind : kAll) {
        CHECK(stroke_distance(kind, s, t) >= 0);
        CHECK(stroke_distance(kind, s, s) == 0);
        CHECK(stroke_distance(kind, s, t) == stroke_distance(kind, t, s));
      }
      const int dx = off(rng), dy = off(rng);
      CHECK(d_directional(translate(s, dx, dy), t) == d_directional(s, t));

      Stroke inserted = s;
      inserted.points.insert(inserted.points.begin() + 1, {off(rng), off(rng)});
      CHECK(d_endpoint(inserted, t) == d_endpoint(s, t));
    }
  }

  TEST_CASE("empty strokes are rejected") {
    for (auto kind : kAll) CHECK_THROWS_AS(stroke_distance(kind, Stroke{}, S({{0, 0}, {1, 1}})), Error);
  }
}
