#include "eval_report.hpp"

#include <algorithm>
#include <cstdio>

namespace slcli {
namespace {

char32_t first_code_point(std::string_view s) {
  if (s.empty()) return 0;
  const auto b = static_cast<unsigned char>(s[0]);
  auto cont = [&](std::size_t i) -> char32_t {
    return i < s.size() ? static_cast<unsigned char>(s[i]) & 0x3F : 0;
  };
  if (b < 0x80) return b;
  if ((b & 0xE0) == 0xC0) return (char32_t(b & 0x1F) << 6) | cont(1);
  if ((b & 0xF0) == 0xE0) return (char32_t(b & 0x0F) << 12) | (cont(1) << 6) | cont(2);
  if ((b & 0xF8) == 0xF0) return (char32_t(b & 0x07) << 18) | (cont(1) << 12) | (cont(2) << 6) | cont(3);
  return 0;
}

double percent(std::size_t n, std::size_t total) { return total ? 100.0 * double(n) / double(total) : 0.0; }

nlohmann::json topk_json(const TopK& t) {
  return {{"total", t.total}, {"top1", t.top1}, {"top5", t.top5}, {"top10", t.top10}};
}

}  // namespace

std::string_view class_name(CharClass c) {
  switch (c) {
    case CharClass::Kanji:
      return "kanji";
    case CharClass::Hiragana:
      return "hiragana";
    case CharClass::Katakana:
      return "katakana";
    case CharClass::Other:
      break;
  }
  return "other";
}

CharClass classify_label(std::string_view label) {
  const char32_t c = first_code_point(label);
  if ((c >= 0x4E00 && c <= 0x9FFF) || (c >= 0x3400 && c <= 0x4DBF) || (c >= 0xF900 && c <= 0xFAFF) ||
      (c >= 0x20000 && c <= 0x2FFFF) || c == 0x3005)
    return CharClass::Kanji;
  if (c >= 0x3040 && c <= 0x309F) return CharClass::Hiragana;
  if ((c >= 0x30A0 && c <= 0x30FF) || (c >= 0x31F0 && c <= 0x31FF)) return CharClass::Katakana;
  return CharClass::Other;
}

void EvalAccumulator::add(const std::string& expected, const std::vector<std::string>& ranked, double ms) {
  const auto it = std::find(ranked.begin(), ranked.end(), expected);
  const std::size_t rank = it == ranked.end() ? 0 : std::size_t(it - ranked.begin()) + 1;
  auto bump = [rank](TopK& t) {
    ++t.total;
    if (rank == 0) return;
    if (rank <= 1) ++t.top1;
    if (rank <= 5) ++t.top5;
    if (rank <= 10) ++t.top10;
  };
  bump(r_.overall);
  bump(r_.by_class[std::size_t(classify_label(expected))]);

  auto& t = r_.timing;
  t.min_ms = t.count ? std::min(t.min_ms, ms) : ms;
  t.max_ms = t.count ? std::max(t.max_ms, ms) : ms;
  ++t.count;
  sum_ms_ += ms;
}

EvalReport EvalAccumulator::report() const {
  EvalReport out = r_;
  // Summing then dividing can drift a hair outside [min, max].
  if (out.timing.count) out.timing.avg_ms = std::clamp(sum_ms_ / double(out.timing.count), out.timing.min_ms, out.timing.max_ms);
  return out;
}

std::string format_timing(const Timing& t) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "timing (ms)  min %.3f  max %.3f  avg %.3f  (n=%zu)", t.min_ms, t.max_ms, t.avg_ms,
                t.count);
  return buf;
}

std::string format_report(const EvalReport& r) {
  std::string out;
  char buf[200];
  std::snprintf(buf, sizeof buf, "%-10s %7s %14s %14s %14s\n", "class", "total", "top1", "top5", "top10");
  out += buf;
  auto row = [&](std::string_view name, const TopK& t) {
    char cell[3][32];
    const std::size_t v[3] = {t.top1, t.top5, t.top10};
    for (int i = 0; i < 3; ++i) std::snprintf(cell[i], sizeof cell[i], "%zu (%.1f%%)", v[i], percent(v[i], t.total));
    std::snprintf(buf, sizeof buf, "%-10.*s %7zu %14s %14s %14s\n", int(name.size()), name.data(), t.total, cell[0],
                  cell[1], cell[2]);
    out += buf;
  };
  for (auto c : kClasses) row(class_name(c), r.by_class[std::size_t(c)]);
  row("overall", r.overall);
  out += format_timing(r.timing);
  out += '\n';
  return out;
}

nlohmann::json report_json(const EvalReport& r) {
  nlohmann::json classes = nlohmann::json::object();
  for (auto c : kClasses) classes[std::string(class_name(c))] = topk_json(r.by_class[std::size_t(c)]);
  return {{"overall", topk_json(r.overall)},
          {"classes", classes},
          {"timing_ms", {{"count", r.timing.count}, {"min", r.timing.min_ms}, {"max", r.timing.max_ms}, {"avg", r.timing.avg_ms}}}};
}

}  // namespace slcli
