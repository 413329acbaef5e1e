#pragma once

#include <span>
#include <string>
#include <vector>

namespace strokelink {

/// Integer pen sample or normalized pixel coordinate.
struct Point {
  int x = 0;
  int y = 0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Points of one pen-down to pen-up trace, in temporal order.
struct Stroke {
  std::vector<Point> points;

  std::size_t size() const noexcept { return points.size(); }
  bool empty() const noexcept { return points.empty(); }
  const Point& front() const { return points.front(); }
  const Point& back() const { return points.back(); }
  const Point& operator[](std::size_t i) const { return points[i]; }

  friend bool operator==(const Stroke&, const Stroke&) = default;
};

/// Strokes in drawing order. Recognition never depends on this order.
struct Character {
  std::vector<Stroke> strokes;

  std::size_t size() const noexcept { return strokes.size(); }
  bool empty() const noexcept { return strokes.empty(); }
  const Stroke& operator[](std::size_t i) const { return strokes[i]; }

  friend bool operator==(const Character&, const Character&) = default;
};

/// A preprocessed reference character.
struct Template {
  std::string label;
  Character character;
};

/// Assignment from strokes of the larger character (index) to strokes of the
/// smaller one (value). kUnassigned marks free slots before completion.
using StrokeMap = std::vector<int>;
inline constexpr int kUnassigned = -1;

struct Candidate {
  std::string label;
  double score = 0.0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Ascending score, ties broken by label.
bool candidate_less(const Candidate& a, const Candidate& b);

/// In-order point concatenation. Throws Error on an empty sequence.
Stroke concat_strokes(std::span<const Stroke> strokes);

}  // namespace strokelink
