#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "strokelink/distance.hpp"
#include "strokelink/linking.hpp"
#include "strokelink/model.hpp"
#include "strokelink/preprocess.hpp"

namespace strokelink {

struct RecognizerConfig {
  std::size_t coarse_keep = 100;
  std::size_t fine_keep = 10;
  /// Inputs with fewer strokes than this are scored with the directional
  /// distance, all others with the whole-whole distance.
  int directional_threshold = 3;
  LinkConfig link;
  PreprocessConfig preprocess;
  /// Skip templates whose stroke count differs from the input by more than
  /// this. Negative disables the filter.
  int stroke_count_window = -1;

  void validate() const;
};

/// Preprocessed templates with unique labels, all built with one
/// PreprocessConfig.
class TemplateStore {
 public:
  explicit TemplateStore(PreprocessConfig cfg = {});

  /// Preprocesses `raw` and stores it. Throws on a duplicate label.
  void add_raw(std::string label, const Character& raw);
  /// Stores an already preprocessed template. Throws on a duplicate label.
  void add(Template t);

  std::size_t size() const noexcept { return templates_.size(); }
  bool empty() const noexcept { return templates_.empty(); }
  const Template& operator[](std::size_t i) const { return templates_[i]; }
  auto begin() const noexcept { return templates_.begin(); }
  auto end() const noexcept { return templates_.end(); }

  const Template* find(std::string_view label) const;
  /// Template indices with exactly `count` strokes, in insertion order.
  const std::vector<std::size_t>& with_stroke_count(std::size_t count) const;

  const PreprocessConfig& preprocess_config() const noexcept { return cfg_; }

 private:
  PreprocessConfig cfg_;
  std::vector<Template> templates_;
  std::unordered_map<std::string, std::size_t> by_label_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_stroke_count_;
};

/// Final weight of a complete correspondence: the mean over small strokes of
/// gamma * d(concatenated group, small stroke), where gamma is the point-count
/// ratio max/min for groups of more than one stroke and 1 otherwise.
double weight(const Character& big, const Character& small, const StrokeMap& map, StrokeDistanceKind d);

/// Distance used to complete maps and weigh candidates in the fine stage.
StrokeDistanceKind fine_distance(std::size_t input_strokes, int directional_threshold);

/// Links input and template (the one with more strokes is the big side),
/// completes the map with `complete_d` when counts differ, and returns the
/// weight under `weight_d`.
double score_template(const Character& input, const Character& tmpl, StrokeDistanceKind link_d, int passes,
                      StrokeDistanceKind complete_d, StrokeDistanceKind weight_d);

/// Endpoint-distance scoring of every template; best `coarse_keep` ascending.
/// `input` must already be preprocessed.
std::vector<Candidate> coarse_classify(const Character& input, const TemplateStore& store,
                                       const RecognizerConfig& cfg);

/// Rescores the candidates with the fine distances; best `fine_keep` ascending.
std::vector<Candidate> fine_classify(const Character& input, const std::vector<Candidate>& candidates,
                                     const TemplateStore& store, const RecognizerConfig& cfg);

/// Full pipeline on raw pen input. Inputs are preprocessed with the store's
/// configuration.
std::vector<Candidate> recognize(const Character& raw, const TemplateStore& store, const RecognizerConfig& cfg);

/// Immutable store plus configuration; safe to share between threads.
class Recognizer {
 public:
  /// Throws when `cfg` is invalid or its preprocessing differs from the
  /// store's.
  Recognizer(TemplateStore store, RecognizerConfig cfg);

  const TemplateStore& store() const noexcept { return store_; }
  const RecognizerConfig& config() const noexcept { return cfg_; }

  /// `top` overrides fine_keep when non-zero.
  std::vector<Candidate> recognize(const Character& raw, std::size_t top = 0) const;

 private:
  TemplateStore store_;
  RecognizerConfig cfg_;
};

}  // namespace strokelink
