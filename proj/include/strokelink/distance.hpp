#pragma once

#include <cstddef>

#include "strokelink/model.hpp"

namespace strokelink {

enum class StrokeDistanceKind { Endpoint, Initial, WholeWhole, Directional };

/// Zero-based uniform resampling index: maps i in [0, m) onto [0, n) with
/// j(0) = 0 and j(m-1) = n-1, multiplying before the integer division.
/// Requires n >= m >= 2.
std::size_t resample_index(std::size_t i, std::size_t n, std::size_t m);

// All distances orient their arguments internally so the first has at least
// as many points as the second; every function is symmetric as a result.

/// Manhattan distance between first points plus between last points.
double d_endpoint(const Stroke& s, const Stroke& t);

/// (n/m) times the Manhattan distance summed over the first m point pairs.
double d_initial(const Stroke& s, const Stroke& t);

/// Mean Manhattan distance between every point of the shorter stroke and the
/// resampled point of the longer. Both strokes need >= 2 points.
double d_whole_whole(const Stroke& s, const Stroke& t);

/// Like d_whole_whole but over consecutive differences, so it compares
/// direction and ignores position. Both strokes need >= 2 points.
double d_directional(const Stroke& s, const Stroke& t);

double stroke_distance(StrokeDistanceKind kind, const Stroke& s, const Stroke& t);

}  // namespace strokelink
