#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace slcli {

enum class CharClass { Kanji, Hiragana, Katakana, Other };

inline constexpr std::array<CharClass, 4> kClasses{CharClass::Kanji, CharClass::Hiragana, CharClass::Katakana,
                                                   CharClass::Other};

std::string_view class_name(CharClass c);

/// Class of the first code point of a UTF-8 label.
CharClass classify_label(std::string_view label);

struct TopK {
  std::size_t total = 0;
  std::size_t top1 = 0;
  std::size_t top5 = 0;
  std::size_t top10 = 0;
};

struct Timing {
  std::size_t count = 0;
  double min_ms = 0;
  double max_ms = 0;
  double avg_ms = 0;
};

struct EvalReport {
  TopK overall;
  std::array<TopK, 4> by_class{};
  Timing timing;
};

class EvalAccumulator {
 public:
  /// `ranked` holds candidate labels best first.
  void add(const std::string& expected, const std::vector<std::string>& ranked, double ms);
  EvalReport report() const;

 private:
  EvalReport r_;
  double sum_ms_ = 0;
};

/// Plain-text table: one row per class plus the overall row, then timing.
std::string format_report(const EvalReport& r);

/// Stable-keyed JSON form.
nlohmann::json report_json(const EvalReport& r);

std::string format_timing(const Timing& t);

}  // namespace slcli
