#pragma once

#include <initializer_list>
#include <random>

#include "strokelink/model.hpp"

namespace testing {

inline strokelink::Stroke S(std::initializer_list<strokelink::Point> pts) { return {std::vector(pts)}; }

inline strokelink::Character K(std::initializer_list<strokelink::Stroke> strokes) { return {std::vector(strokes)}; }

inline strokelink::Stroke random_stroke(std::mt19937& rng, int min_len, int max_len, int lo = 0, int hi = 255) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> coord(lo, hi);
  strokelink::Stroke s;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) s.points.push_back({coord(rng), coord(rng)});
  return s;
}

}  // namespace testing
