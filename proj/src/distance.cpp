#include "strokelink/distance.hpp"

#include <cstdlib>
#include <utility>

#include "strokelink/error.hpp"

namespace strokelink {
namespace {

int manhattan(Point a, Point b) { return std::abs(a.x - b.x) + std::abs(a.y - b.y); }

// Returns (longer, shorter).
std::pair<const Stroke&, const Stroke&> orient(const Stroke& s, const Stroke& t) {
  if (s.size() >= t.size()) return {s, t};
  return {t, s};
}

void require_nonempty(const Stroke& s, const Stroke& t) {
  if (s.empty() || t.empty()) throw Error(ErrorCode::InvalidArgument, "stroke distance of an empty stroke");
}

}  // namespace

std::size_t resample_index(std::size_t i, std::size_t n, std::size_t m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "resampling needs at least 2 points");
  if (n < m) throw Error(ErrorCode::InvalidArgument, "resampling needs n >= m");
  return (n - 1) * i / (m - 1);
}

double d_endpoint(const Stroke& s, const Stroke& t) {
  require_nonempty(s, t);
  return manhattan(s.front(), t.front()) + manhattan(s.back(), t.back());
}

double d_initial(const Stroke& s, const Stroke& t) {
  require_nonempty(s, t);
  const auto [lng, shrt] = orient(s, t);
  const std::size_t n = lng.size();
  const std::size_t m = shrt.size();
  long sum = 0;
  for (std::size_t i = 0; i < m; ++i) sum += manhattan(lng[i], shrt[i]);
  return static_cast<double>(n) / static_cast<double>(m) * static_cast<double>(sum);
}

double d_whole_whole(const Stroke& s, const Stroke& t) {
  require_nonempty(s, t);
  const auto [lng, shrt] = orient(s, t);
  const std::size_t n = lng.size();
  const std::size_t m = shrt.size();
  long sum = 0;
  for (std::size_t i = 0; i < m; ++i) sum += manhattan(lng[resample_index(i, n, m)], shrt[i]);
  return static_cast<double>(sum) / static_cast<double>(m);
}

double d_directional(const Stroke& s, const Stroke& t) {
  require_nonempty(s, t);
  const auto [lng, shrt] = orient(s, t);
  const std::size_t n = lng.size();
  const std::size_t m = shrt.size();
  long sum = 0;
  std::size_t prev = resample_index(0, n, m);
  for (std::size_t i = 1; i < m; ++i) {
    const std::size_t cur = resample_index(i, n, m);
    const int dx = (lng[cur].x - lng[prev].x) - (shrt[i].x - shrt[i - 1].x);
    const int dy = (lng[cur].y - lng[prev].y) - (shrt[i].y - shrt[i - 1].y);
    sum += std::abs(dx) + std::abs(dy);
    prev = cur;
  }
  return static_cast<double>(sum) / static_cast<double>(m);
}

double stroke_distance(StrokeDistanceKind kind, const Stroke& s, const Stroke& t) {
  switch (kind) {
    case StrokeDistanceKind::Endpoint:
      return d_endpoint(s, t);
    case StrokeDistanceKind::Initial:
      return d_initial(s, t);
    case StrokeDistanceKind::WholeWhole:
      return d_whole_whole(s, t);
    case StrokeDistanceKind::Directional:
      return d_directional(s, t);
  }
  throw Error(ErrorCode::Internal, "unknown stroke distance");
}

}  // namespace strokelink
