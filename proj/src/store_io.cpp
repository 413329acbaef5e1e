#include "strokelink/store_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "strokelink/error.hpp"

namespace strokelink {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f'; }

bool is_blank(std::string_view line) {
  for (char c : line)
    if (!is_space(c)) return false;
  return true;
}

[[noreturn]] void fail(std::size_t line, std::size_t column, const std::string& msg) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

bool parse_pair(std::string_view token, Point& p) {
  const auto comma = token.find(',');
  if (comma == std::string_view::npos) return false;
  return parse_int(token.substr(0, comma), p.x) && parse_int(token.substr(comma + 1), p.y);
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool is_stroke_line(std::string_view line) {
  const auto tokens = tokenize(line);
  if (tokens.empty()) return false;
  Point p;
  for (const auto& t : tokens)
    if (!parse_pair(t.text, p)) return false;
  return true;
}

Stroke parse_stroke_line(std::string_view line, std::size_t line_no) {
  Stroke s;
  for (const auto& t : tokenize(line)) {
    Point p;
    if (!parse_pair(t.text, p)) fail(line_no, t.column, "expected integer pair x,y but found '" + std::string(t.text) + "'");
    s.points.push_back(p);
  }
  return s;
}

}  // namespace

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label)
    if (is_space(c) || c == '\n' || c == '\r') return false;
  return !is_stroke_line(label);
}

std::vector<RawCharacterRecord> parse_records(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) fail(1, 1, "byte order mark is not allowed");

  std::vector<RawCharacterRecord> records;
  std::optional<RawCharacterRecord> current;
  std::size_t record_line = 0;

  const auto finish = [&] {
    if (!current) return;
    if (current->strokes.empty()) fail(record_line, 1, "record '" + current->label.value_or("") + "' has no strokes");
    records.push_back(std::move(*current));
    current.reset();
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;

    if (const auto cr = line.find('\r'); cr != std::string_view::npos)
      fail(line_no, cr + 1, "carriage return found; only LF line endings are supported");

    if (is_blank(line)) {
      finish();
      continue;
    }
    if (!current) {
      current.emplace();
      record_line = line_no;
      if (!is_stroke_line(line)) {
        const auto tokens = tokenize(line);
        if (tokens.size() != 1) fail(line_no, tokens[1].column, "label must not contain whitespace");
        current->label = std::string(tokens.front().text);
        continue;
      }
    }
    current->strokes.strokes.push_back(parse_stroke_line(line, line_no));
  }
  finish();
  return records;
}

RawCharacterRecord parse_character(std::string_view text) {
  auto records = parse_records(text);
  if (records.empty()) throw Error(ErrorCode::Parse, "no strokes");
  if (records.size() > 1) throw Error(ErrorCode::Parse, "expected a single record, found " + std::to_string(records.size()));
  return std::move(records.front());
}

std::string serialize(const RawCharacterRecord& record) {
  if (record.label && !is_valid_label(*record.label))
    throw Error(ErrorCode::InvalidArgument, "label cannot be serialized: '" + *record.label + "'");
  if (record.strokes.empty()) throw Error(ErrorCode::InvalidArgument, "record has no strokes");
  std::string out;
  if (record.label) {
    out += *record.label;
    out += '\n';
  }
  for (const auto& s : record.strokes.strokes) {
    if (s.empty()) throw Error(ErrorCode::InvalidArgument, "record has an empty stroke");
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(s[i].x);
      out += ',';
      out += std::to_string(s[i].y);
    }
    out += '\n';
  }
  return out;
}

std::string serialize_records(std::span<const RawCharacterRecord> records) {
  std::string out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out += '\n';
    out += serialize(records[i]);
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::Io, "cannot read " + path.string());
  return text;
}

std::vector<RawCharacterRecord> load_records(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return parse_records(text);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Parse) throw;
    throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
  }
}

TemplateStore build_store(std::span<const RawCharacterRecord> records, const PreprocessConfig& cfg) {
  TemplateStore store(cfg);
  for (const auto& r : records) {
    if (!r.label) throw Error(ErrorCode::Parse, "template record without a label");
    store.add_raw(*r.label, r.strokes);
  }
  return store;
}

TemplateStore load_templates(const std::filesystem::path& path, const PreprocessConfig& cfg) {
  return build_store(load_records(path), cfg);
}

std::vector<LabeledSample> to_testset(std::span<const RawCharacterRecord> records) {
  std::vector<LabeledSample> out;
  out.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].label) throw Error(ErrorCode::Parse, "test record " + std::to_string(i + 1) + " has no label");
    out.push_back({records[i], *records[i].label});
  }
  return out;
}

std::vector<LabeledSample> load_testset(const std::filesystem::path& path) { return to_testset(load_records(path)); }

}  // namespace strokelink
