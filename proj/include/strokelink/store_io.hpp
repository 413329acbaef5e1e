#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strokelink/model.hpp"
#include "strokelink/preprocess.hpp"
#include "strokelink/recognizer.hpp"

namespace strokelink {

/// Unnormalized stroke data as read from a record file.
struct RawCharacterRecord {
  std::optional<std::string> label;
  Character strokes;

  friend bool operator==(const RawCharacterRecord&, const RawCharacterRecord&) = default;
};

struct LabeledSample {
  RawCharacterRecord record;
  std::string expected;
};

// Record format (UTF-8, LF line endings, no BOM):
//
//   label
//   x,y x,y x,y        <- one line per stroke
//   x,y x,y
//                      <- blank line ends the record
//
// The label line is optional for unlabeled input; a first line made only of
// coordinate pairs starts the strokes directly.

/// Parses every record in `text`. Empty input yields no records.
std::vector<RawCharacterRecord> parse_records(std::string_view text);

/// Parses exactly one record.
RawCharacterRecord parse_character(std::string_view text);

/// True when `label` can be written to a record file: non-empty, no
/// whitespace, and not itself a coordinate line.
bool is_valid_label(std::string_view label);

std::string serialize(const RawCharacterRecord& record);
std::string serialize_records(std::span<const RawCharacterRecord> records);

/// Reads a whole file; "-" reads standard input.
std::string read_text(const std::filesystem::path& path);

std::vector<RawCharacterRecord> load_records(const std::filesystem::path& path);

/// Preprocesses every record with `cfg`. Records must be labeled and labels
/// unique.
TemplateStore build_store(std::span<const RawCharacterRecord> records, const PreprocessConfig& cfg);
TemplateStore load_templates(const std::filesystem::path& path, const PreprocessConfig& cfg);

/// Labeled test samples in file order.
std::vector<LabeledSample> to_testset(std::span<const RawCharacterRecord> records);
std::vector<LabeledSample> load_testset(const std::filesystem::path& path);

}  // namespace strokelink
