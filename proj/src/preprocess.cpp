#include "strokelink/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "strokelink/error.hpp"

namespace strokelink {
namespace {

int round_clamp(double v, int target) {
  const long r = std::lround(v);  // half away from zero
  return static_cast<int>(std::clamp<long>(r, 0, target - 1));
}

void bresenham(Point a, Point b, std::vector<Point>& out) {
  const int dx = std::abs(b.x - a.x);
  const int dy = -std::abs(b.y - a.y);
  const int sx = a.x < b.x ? 1 : -1;
  const int sy = a.y < b.y ? 1 : -1;
  int err = dx + dy;
  int x = a.x;
  int y = a.y;
  while (x != b.x || y != b.y) {
    const int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y += sy;
    }
    out.push_back({x, y});
  }
}

template <typename F>
Character map_points(const Character& k, F&& f) {
  Character out;
  out.strokes.reserve(k.size());
  for (const auto& s : k.strokes) {
    Stroke t;
    t.points.reserve(s.size());
    for (const auto& p : s.points) t.points.push_back(f(p));
    out.strokes.push_back(std::move(t));
  }
  return out;
}

void require_points(const Character& k) {
  if (k.empty()) throw Error(ErrorCode::InvalidArgument, "no strokes");
  for (const auto& s : k.strokes)
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty stroke");
}

// Edge positions along one scan line of length n. `ink(i)` must return false
// outside [0, n).
//   E1 = max{i' < i : right edge at i'}   E2 = min{i' >= i : right edge at i'}
//   E3 = max{i' < i : left edge at i'}    E4 = min{i' >= i : left edge at i'}
// A right edge is ink followed by blank, a left edge is blank followed by ink.
template <typename Ink>
void line_intervals(int n, double extent, Ink&& ink, std::vector<double>& out) {
  constexpr int kNone = std::numeric_limits<int>::min();
  std::vector<int> e1(n), e2(n), e3(n), e4(n);
  int last_right = kNone;
  int last_left = kNone;
  for (int i = 0; i < n; ++i) {
    e1[i] = last_right;
    e3[i] = last_left;
    if (ink(i) && !ink(i + 1)) last_right = i;
    if (!ink(i - 1) && ink(i)) last_left = i;
  }
  int next_right = kNone;
  int next_left = kNone;
  for (int i = n - 1; i >= 0; --i) {
    if (ink(i) && !ink(i + 1)) next_right = i;
    if (!ink(i - 1) && ink(i)) next_left = i;
    e2[i] = next_right;
    e4[i] = next_left;
  }

  out.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const bool u1 = e1[i] == kNone;
    const bool u2 = e2[i] == kNone;
    const bool u3 = e3[i] == kNone;
    const bool u4 = e4[i] == kNone;
    const int undefined = u1 + u2 + u3 + u4;
    double len;
    if (undefined == 4) {
      len = 4.0 * extent;
    } else if (undefined == 0) {
      len = ((e2[i] - e1[i]) + (e4[i] - e3[i])) / 2.0;
    } else if (undefined == 1 && (u1 || u2)) {
      len = e4[i] - e3[i];
    } else if (undefined == 1 && (u3 || u4)) {
      len = e2[i] - e1[i];
    } else {
      len = 2.0 * extent;
    }
    out[i] = std::max(len, 1.0);
  }
}

}  // namespace

std::string_view normalization_name(NormalizationKind kind) {
  switch (kind) {
    case NormalizationKind::Linear:
      return "linear";
    case NormalizationKind::Moment:
      return "moment";
    case NormalizationKind::DotDensity:
      return "dot-density";
    case NormalizationKind::LineDensity:
      return "line-density";
  }
  return "unknown";
}

std::optional<NormalizationKind> parse_normalization(std::string_view name) {
  for (auto k : {NormalizationKind::Linear, NormalizationKind::Moment, NormalizationKind::DotDensity,
                 NormalizationKind::LineDensity})
    if (normalization_name(k) == name) return k;
  return std::nullopt;
}

BinaryImage::BinaryImage(int width, int height)
    : width_(width), height_(height), pixels_(static_cast<std::size_t>(width) * height, 0) {
  if (width < 1 || height < 1) throw Error(ErrorCode::InvalidArgument, "image dimensions must be positive");
}

std::size_t BinaryImage::count() const noexcept {
  return static_cast<std::size_t>(std::count(pixels_.begin(), pixels_.end(), std::uint8_t{1}));
}

void PreprocessConfig::validate() const {
  if (target_size < 2) throw Error(ErrorCode::InvalidArgument, "target size must be >= 2");
  if (!(feature_spacing > 0.0)) throw Error(ErrorCode::InvalidArgument, "feature spacing must be positive");
  if (!(aspect_guard_ratio >= 1.0)) throw Error(ErrorCode::InvalidArgument, "aspect guard ratio must be >= 1");
  if (!(moment_spread > 0.0)) throw Error(ErrorCode::InvalidArgument, "moment spread must be positive");
  if (method.kind == NormalizationKind::DotDensity && method.alpha < 1)
    throw Error(ErrorCode::InvalidArgument, "dot density alpha must be a positive integer");
}

Stroke interpolate_stroke(const Stroke& s) {
  Stroke out;
  if (s.empty()) return out;
  out.points.reserve(s.size());
  out.points.push_back(s.front());
  for (std::size_t i = 1; i < s.size(); ++i) bresenham(out.points.back(), s[i], out.points);
  return out;
}

Character interpolate(const Character& k) {
  Character out;
  out.strokes.reserve(k.size());
  for (const auto& s : k.strokes) out.strokes.push_back(interpolate_stroke(s));
  return out;
}

Box bounding_box(const Character& k) {
  require_points(k);
  int x0 = std::numeric_limits<int>::max();
  int y0 = x0;
  int x1 = std::numeric_limits<int>::min();
  int y1 = x1;
  for (const auto& s : k.strokes)
    for (const auto& p : s.points) {
      x0 = std::min(x0, p.x);
      y0 = std::min(y0, p.y);
      x1 = std::max(x1, p.x);
      y1 = std::max(y1, p.y);
    }
  return {x0, y0, x1 - x0 + 1, y1 - y0 + 1};
}

BinaryImage rasterize(const Character& k, const Box& box) {
  BinaryImage img(box.width, box.height);
  for (const auto& s : k.strokes)
    for (const auto& p : s.points) {
      const int x = p.x - box.x_min;
      const int y = p.y - box.y_min;
      if (x >= 0 && y >= 0 && x < box.width && y < box.height) img.set(x, y);
    }
  return img;
}

Character normalize_linear(const Character& k, const Box& box, int target, bool preserve_aspect) {
  double sx = static_cast<double>(target) / box.width;
  double sy = static_cast<double>(target) / box.height;
  if (preserve_aspect) sx = sy = std::min(sx, sy);
  return map_points(k, [&](Point p) {
    return Point{round_clamp((p.x - box.x_min) * sx, target), round_clamp((p.y - box.y_min) * sy, target)};
  });
}

Character normalize_moment(const Character& k, const Box& box, const BinaryImage& image, int target,
                           double spread) {
  double m00 = 0, m10 = 0, m01 = 0;
  for (int y = 0; y < image.height(); ++y)
    for (int x = 0; x < image.width(); ++x)
      if (image.at(x, y)) {
        m00 += 1;
        m10 += x;
        m01 += y;
      }
  if (m00 == 0) return normalize_linear(k, box, target, false);
  const double xc = m10 / m00;
  const double yc = m01 / m00;
  double mu20 = 0, mu02 = 0;
  for (int y = 0; y < image.height(); ++y)
    for (int x = 0; x < image.width(); ++x)
      if (image.at(x, y)) {
        mu20 += (x - xc) * (x - xc);
        mu02 += (y - yc) * (y - yc);
      }
  if (mu20 <= 0 || mu02 <= 0) return normalize_linear(k, box, target, false);

  const double dx = spread * std::sqrt(mu20 / m00);
  const double dy = spread * std::sqrt(mu02 / m00);
  const double half = target / 2.0;
  return map_points(k, [&](Point p) {
    const double x = p.x - box.x_min;
    const double y = p.y - box.y_min;
    return Point{round_clamp(target / dx * (x - xc) + half, target),
                 round_clamp(target / dy * (y - yc) + half, target)};
  });
}

Projections dot_density_projections(const BinaryImage& image, int alpha) {
  Projections p;
  p.horizontal.assign(image.width(), alpha);
  p.vertical.assign(image.height(), alpha);
  for (int y = 0; y < image.height(); ++y)
    for (int x = 0; x < image.width(); ++x)
      if (image.at(x, y)) {
        p.horizontal[x] += 1;
        p.vertical[y] += 1;
      }
  return p;
}

Character normalize_dot_density(const Character& k, const Box& box, const BinaryImage& image, int target,
                                int alpha) {
  if (alpha < 1) throw Error(ErrorCode::InvalidArgument, "dot density alpha must be a positive integer");
  return equalize(k, box, dot_density_projections(image, alpha), target);
}

Projections line_density_projections(const BinaryImage& image) {
  const int w = image.width();
  const int h = image.height();
  std::vector<double> lx(static_cast<std::size_t>(w) * h);
  std::vector<double> ly(static_cast<std::size_t>(w) * h);
  std::vector<double> buf;

  for (int j = 0; j < h; ++j) {
    line_intervals(w, w, [&](int i) { return image.at(i, j); }, buf);
    std::copy(buf.begin(), buf.end(), lx.begin() + static_cast<std::ptrdiff_t>(j) * w);
  }
  for (int i = 0; i < w; ++i) {
    line_intervals(h, h, [&](int j) { return image.at(i, j); }, buf);
    for (int j = 0; j < h; ++j) ly[static_cast<std::size_t>(j) * w + i] = buf[j];
  }

  Projections p;
  p.horizontal.assign(w, 0.0);
  p.vertical.assign(h, 0.0);
  // The threshold compares against 6 * width on both axes.
  const double limit = 6.0 * w;
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i) {
      const std::size_t at = static_cast<std::size_t>(j) * w + i;
      if (lx[at] + ly[at] >= limit) continue;
      const double rho = std::max(w / lx[at], h / ly[at]);
      p.horizontal[i] += rho;
      p.vertical[j] += rho;
    }
  return p;
}

Character normalize_line_density(const Character& k, const Box& box, const BinaryImage& image, int target) {
  if (image.count() == 0) return normalize_linear(k, box, target, false);
  auto proj = line_density_projections(image);
  const double sh = std::accumulate(proj.horizontal.begin(), proj.horizontal.end(), 0.0);
  const double sv = std::accumulate(proj.vertical.begin(), proj.vertical.end(), 0.0);
  if (sh <= 0 || sv <= 0) return normalize_linear(k, box, target, false);
  return equalize(k, box, proj, target);
}

Character equalize(const Character& k, const Box& box, const Projections& proj, int target) {
  auto cumulative = [target](const std::vector<double>& h) {
    std::vector<double> c(h.size(), 0.0);
    double total = std::accumulate(h.begin(), h.end(), 0.0);
    double run = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      c[i] = total > 0 ? run * target / total : 0.0;
      run += h[i];
    }
    return c;
  };
  const auto cx = cumulative(proj.horizontal);
  const auto cy = cumulative(proj.vertical);
  const auto lookup = [target](const std::vector<double>& c, int v) {
    if (c.empty()) return 0;
    v = std::clamp(v, 0, static_cast<int>(c.size()) - 1);
    return round_clamp(c[v], target);
  };
  return map_points(k, [&](Point p) { return Point{lookup(cx, p.x - box.x_min), lookup(cy, p.y - box.y_min)}; });
}

Stroke extract_feature_points(const Stroke& s, double spacing) {
  Stroke out;
  if (s.empty()) return out;
  out.points.push_back(s.front());
  std::size_t last = 0;
  double acc = 0.0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    acc += std::hypot(double(s[i].x - s[i - 1].x), double(s[i].y - s[i - 1].y));
    if (acc >= spacing) {
      out.points.push_back(s[i]);
      last = i;
      acc = 0.0;
    }
  }
  if (last != s.size() - 1 || s.size() == 1) out.points.push_back(s.back());
  return out;
}

bool aspect_guard_triggered(const Box& box, double ratio) {
  const int lo = std::min(box.width, box.height);
  const int hi = std::max(box.width, box.height);
  return hi > ratio * lo;
}

Character preprocess(const Character& k, const PreprocessConfig& cfg) {
  cfg.validate();
  require_points(k);
  const Character dense = interpolate(k);
  const Box box = bounding_box(dense);
  const int target = cfg.target_size;

  Character normalized;
  if (aspect_guard_triggered(box, cfg.aspect_guard_ratio)) {
    normalized = normalize_linear(dense, box, target, true);
  } else {
    switch (cfg.method.kind) {
      case NormalizationKind::Linear:
        normalized = normalize_linear(dense, box, target, false);
        break;
      case NormalizationKind::Moment:
        normalized = normalize_moment(dense, box, rasterize(dense, box), target, cfg.moment_spread);
        break;
      case NormalizationKind::DotDensity:
        normalized = normalize_dot_density(dense, box, rasterize(dense, box), target, cfg.method.alpha);
        break;
      case NormalizationKind::LineDensity:
        normalized = normalize_line_density(dense, box, rasterize(dense, box), target);
        break;
    }
  }

  Character out;
  out.strokes.reserve(normalized.size());
  for (const auto& s : normalized.strokes)
    out.strokes.push_back(extract_feature_points(interpolate_stroke(s), cfg.feature_spacing));
  return out;
}

}  // namespace strokelink
