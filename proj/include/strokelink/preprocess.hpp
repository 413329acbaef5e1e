#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "strokelink/model.hpp"

namespace strokelink {

/// Tight inclusive bounding box. A degenerate extent is reported as 1.
struct Box {
  int x_min = 0;
  int y_min = 0;
  int width = 1;
  int height = 1;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Binary ink image f(x, y); reads outside the grid return 0.
class BinaryImage {
 public:
  BinaryImage(int width, int height);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  bool at(int x, int y) const noexcept {
    if (x < 0 || y < 0 || x >= width_ || y >= height_) return false;
    return pixels_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int x, int y) { pixels_[static_cast<std::size_t>(y) * width_ + x] = 1; }

  std::size_t count() const noexcept;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> pixels_;
};

enum class NormalizationKind { Linear, Moment, DotDensity, LineDensity };

/// "linear", "moment", "dot-density", "line-density".
std::string_view normalization_name(NormalizationKind kind);
std::optional<NormalizationKind> parse_normalization(std::string_view name);

struct NormalizationMethod {
  NormalizationKind kind = NormalizationKind::Moment;
  int alpha = 2;  // DotDensity only

  static NormalizationMethod linear() { return {NormalizationKind::Linear, 0}; }
  static NormalizationMethod moment() { return {NormalizationKind::Moment, 0}; }
  static NormalizationMethod dot_density(int alpha) { return {NormalizationKind::DotDensity, alpha}; }
  static NormalizationMethod line_density() { return {NormalizationKind::LineDensity, 0}; }

  friend bool operator==(const NormalizationMethod&, const NormalizationMethod&) = default;
};

struct PreprocessConfig {
  int target_size = 256;
  double feature_spacing = 20.0;
  double aspect_guard_ratio = 3.0;
  NormalizationMethod method = NormalizationMethod::moment();
  /// Moment normalization maps +-spread/2 standard deviations onto the target.
  double moment_spread = 4.0;

  /// Throws Error(InvalidArgument) when a field is out of range.
  void validate() const;

  friend bool operator==(const PreprocessConfig&, const PreprocessConfig&) = default;
};

/// Inserts Bresenham grid points between consecutive samples. Output is
/// 8-connected; consecutive duplicate samples collapse.
Stroke interpolate_stroke(const Stroke& s);
Character interpolate(const Character& k);

Box bounding_box(const Character& k);

/// Stamps every point into an image whose origin is the box corner.
BinaryImage rasterize(const Character& k, const Box& box);

Character normalize_linear(const Character& k, const Box& box, int target, bool preserve_aspect);

/// Centroid / second-moment normalization. Falls back to non-aspect linear
/// normalization when the ink has no spread along an axis.
Character normalize_moment(const Character& k, const Box& box, const BinaryImage& image, int target,
                           double spread = 4.0);

Character normalize_dot_density(const Character& k, const Box& box, const BinaryImage& image, int target,
                                int alpha);

/// Per-axis density projections H(x), V(y).
struct Projections {
  std::vector<double> horizontal;
  std::vector<double> vertical;
};

Projections dot_density_projections(const BinaryImage& image, int alpha);
Projections line_density_projections(const BinaryImage& image);

Character normalize_line_density(const Character& k, const Box& box, const BinaryImage& image, int target);

/// Remaps box-relative coordinates through the cumulative projections.
/// Column x lands at target * sum(H[0..x)) / sum(H).
Character equalize(const Character& k, const Box& box, const Projections& proj, int target);

/// Arc-length resampling. Endpoints are always kept; output has >= 2 points.
Stroke extract_feature_points(const Stroke& s, double spacing);

/// True when the box is elongated enough to force aspect-preserving linear
/// normalization.
bool aspect_guard_triggered(const Box& box, double ratio);

/// interpolate -> normalize -> interpolate -> extract feature points.
Character preprocess(const Character& k, const PreprocessConfig& cfg = {});

}  // namespace strokelink
