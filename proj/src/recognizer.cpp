#include "strokelink/recognizer.hpp"

#include <algorithm>
#include <cstdlib>

#include "strokelink/error.hpp"

namespace strokelink {
namespace {

void sort_and_truncate(std::vector<Candidate>& c, std::size_t keep) {
  std::sort(c.begin(), c.end(), candidate_less);
  if (c.size() > keep) c.resize(keep);
}

bool outside_window(const Character& input, const Character& tmpl, int window) {
  if (window < 0) return false;
  const auto a = static_cast<long>(input.size());
  const auto b = static_cast<long>(tmpl.size());
  return std::abs(a - b) > window;
}

}  // namespace

void RecognizerConfig::validate() const {
  if (coarse_keep < 1 || fine_keep < 1) throw Error(ErrorCode::InvalidArgument, "candidate counts must be >= 1");
  if (fine_keep > coarse_keep) throw Error(ErrorCode::InvalidArgument, "fine_keep must not exceed coarse_keep");
  if (directional_threshold < 0) throw Error(ErrorCode::InvalidArgument, "S must be >= 0");
  if (link.passes_coarse < 1 || link.passes_fine < 1)
    throw Error(ErrorCode::InvalidArgument, "improvement passes must be >= 1");
  preprocess.validate();
}

TemplateStore::TemplateStore(PreprocessConfig cfg) : cfg_(cfg) { cfg_.validate(); }

void TemplateStore::add_raw(std::string label, const Character& raw) {
  add(Template{std::move(label), preprocess(raw, cfg_)});
}

void TemplateStore::add(Template t) {
  if (t.label.empty()) throw Error(ErrorCode::InvalidArgument, "template label must not be empty");
  if (t.character.empty()) throw Error(ErrorCode::InvalidArgument, "template has no strokes: " + t.label);
  for (const auto& s : t.character.strokes)
    if (s.size() < 2) throw Error(ErrorCode::InvalidArgument, "template stroke has fewer than 2 points: " + t.label);
  if (by_label_.contains(t.label)) throw Error(ErrorCode::DuplicateLabel, "duplicate template label: " + t.label);
  const std::size_t index = templates_.size();
  by_label_.emplace(t.label, index);
  by_stroke_count_[t.character.size()].push_back(index);
  templates_.push_back(std::move(t));
}

const Template* TemplateStore::find(std::string_view label) const {
  const auto it = by_label_.find(std::string(label));
  return it == by_label_.end() ? nullptr : &templates_[it->second];
}

const std::vector<std::size_t>& TemplateStore::with_stroke_count(std::size_t count) const {
  static const std::vector<std::size_t> kNone;
  const auto it = by_stroke_count_.find(count);
  return it == by_stroke_count_.end() ? kNone : it->second;
}

double weight(const Character& big, const Character& small, const StrokeMap& map, StrokeDistanceKind d) {
  if (map.size() != big.size()) throw Error(ErrorCode::InvalidArgument, "stroke map length mismatch");
  if (small.empty()) throw Error(ErrorCode::InvalidArgument, "weight of an empty character");
  std::vector<std::vector<std::size_t>> groups(small.size());
  for (std::size_t k = 0; k < map.size(); ++k) {
    if (map[k] < 0 || static_cast<std::size_t>(map[k]) >= small.size())
      throw Error(ErrorCode::InvalidArgument, "incomplete stroke map");
    groups[static_cast<std::size_t>(map[k])].push_back(k);
  }

  double total = 0.0;
  Stroke conc;
  for (std::size_t v = 0; v < small.size(); ++v) {
    if (groups[v].empty()) throw Error(ErrorCode::InvalidArgument, "incomplete stroke map");
    conc.points.clear();
    for (std::size_t k : groups[v]) conc.points.insert(conc.points.end(), big[k].points.begin(), big[k].points.end());
    double gamma = 1.0;
    if (groups[v].size() > 1) {
      const double l = static_cast<double>(conc.size());
      const double o = static_cast<double>(small[v].size());
      gamma = std::max(l, o) / std::min(l, o);
    }
    total += gamma * stroke_distance(d, conc, small[v]);
  }
  return total / static_cast<double>(std::min(big.size(), small.size()));
}

StrokeDistanceKind fine_distance(std::size_t input_strokes, int directional_threshold) {
  return static_cast<long>(input_strokes) < directional_threshold ? StrokeDistanceKind::Directional
                                                                  : StrokeDistanceKind::WholeWhole;
}

double score_template(const Character& input, const Character& tmpl, StrokeDistanceKind link_d, int passes,
                      StrokeDistanceKind complete_d, StrokeDistanceKind weight_d) {
  const bool input_big = input.size() >= tmpl.size();
  const Character& big = input_big ? input : tmpl;
  const Character& small = input_big ? tmpl : input;
  StrokeMap map = link(cost_matrix(big, small, link_d), passes);
  if (big.size() != small.size()) map = complete_map(std::move(map), big, small, complete_d);
  return weight(big, small, map, weight_d);
}

std::vector<Candidate> coarse_classify(const Character& input, const TemplateStore& store,
                                       const RecognizerConfig& cfg) {
  if (store.empty()) throw Error(ErrorCode::EmptyStore, "template store is empty");
  if (input.empty()) throw Error(ErrorCode::InvalidArgument, "no strokes");
  std::vector<Candidate> out;
  out.reserve(store.size());
  for (const auto& t : store) {
    if (outside_window(input, t.character, cfg.stroke_count_window)) continue;
    const double s = score_template(input, t.character, StrokeDistanceKind::Endpoint, cfg.link.passes_coarse,
                                    StrokeDistanceKind::Endpoint, StrokeDistanceKind::Endpoint);
    out.push_back({t.label, s});
  }
  sort_and_truncate(out, cfg.coarse_keep);
  return out;
}

std::vector<Candidate> fine_classify(const Character& input, const std::vector<Candidate>& candidates,
                                     const TemplateStore& store, const RecognizerConfig& cfg) {
  const StrokeDistanceKind d = fine_distance(input.size(), cfg.directional_threshold);
  std::vector<Candidate> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) {
    const Template* t = store.find(c.label);
    if (!t) throw Error(ErrorCode::InvalidArgument, "unknown candidate label: " + c.label);
    out.push_back({t->label, score_template(input, t->character, StrokeDistanceKind::Initial, cfg.link.passes_fine, d, d)});
  }
  sort_and_truncate(out, cfg.fine_keep);
  return out;
}

std::vector<Candidate> recognize(const Character& raw, const TemplateStore& store, const RecognizerConfig& cfg) {
  cfg.validate();
  if (raw.empty()) throw Error(ErrorCode::InvalidArgument, "no strokes");
  const Character input = preprocess(raw, store.preprocess_config());
  return fine_classify(input, coarse_classify(input, store, cfg), store, cfg);
}

Recognizer::Recognizer(TemplateStore store, RecognizerConfig cfg) : store_(std::move(store)), cfg_(cfg) {
  cfg_.validate();
  if (!(cfg_.preprocess == store_.preprocess_config()))
    throw Error(ErrorCode::InvalidArgument, "recognizer and template store use different preprocessing");
}

std::vector<Candidate> Recognizer::recognize(const Character& raw, std::size_t top) const {
  if (top == 0) return strokelink::recognize(raw, store_, cfg_);
  RecognizerConfig cfg = cfg_;
  cfg.fine_keep = top;
  cfg.coarse_keep = std::max(cfg.coarse_keep, top);
  return strokelink::recognize(raw, store_, cfg);
}

}  // namespace strokelink
