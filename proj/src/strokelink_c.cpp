#include "strokelink/strokelink.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "strokelink/error.hpp"
#include "strokelink/recognizer.hpp"
#include "strokelink/service.hpp"
#include "strokelink/store_io.hpp"

using namespace strokelink;

struct sl_recognizer {
  std::shared_ptr<const Recognizer> rec;
};

struct sl_candidates {
  std::vector<Candidate> items;
};

struct sl_records {
  struct Packed {
    std::vector<std::int32_t> xy;
    std::vector<std::size_t> lengths;
  };
  std::vector<RawCharacterRecord> records;
  std::vector<Packed> packed;
};

struct sl_server {
  Server server;
};

namespace {

thread_local std::string g_last_error;

sl_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return SL_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse:
      return SL_ERR_PARSE;
    case ErrorCode::Io:
      return SL_ERR_IO;
    case ErrorCode::DuplicateLabel:
      return SL_ERR_DUPLICATE_LABEL;
    case ErrorCode::EmptyStore:
      return SL_ERR_EMPTY_STORE;
    case ErrorCode::Internal:
      return SL_ERR_INTERNAL;
  }
  return SL_ERR_INTERNAL;
}

sl_status fail(sl_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <typename F>
sl_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return SL_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SL_ERR_INTERNAL, e.what());
  }
}

RecognizerConfig to_cpp(const sl_config& c) {
  RecognizerConfig cfg;
  switch (c.normalization) {
    case SL_NORM_LINEAR:
      cfg.preprocess.method = NormalizationMethod::linear();
      break;
    case SL_NORM_MOMENT:
      cfg.preprocess.method = NormalizationMethod::moment();
      break;
    case SL_NORM_DOT_DENSITY:
      cfg.preprocess.method = NormalizationMethod::dot_density(c.alpha);
      break;
    case SL_NORM_LINE_DENSITY:
      cfg.preprocess.method = NormalizationMethod::line_density();
      break;
    default:
      throw Error(ErrorCode::InvalidArgument, "unknown normalization");
  }
  cfg.preprocess.target_size = c.target_size;
  cfg.preprocess.feature_spacing = c.feature_spacing;
  cfg.preprocess.aspect_guard_ratio = c.aspect_guard_ratio;
  cfg.link.passes_coarse = c.passes_coarse;
  cfg.link.passes_fine = c.passes_fine;
  cfg.directional_threshold = c.directional_threshold;
  cfg.coarse_keep = c.coarse_keep;
  cfg.fine_keep = c.fine_keep;
  cfg.stroke_count_window = c.stroke_count_window;
  cfg.validate();
  return cfg;
}

sl_config to_c(const RecognizerConfig& cfg) {
  sl_config c;
  c.normalization = static_cast<sl_normalization>(cfg.preprocess.method.kind);
  c.alpha = cfg.preprocess.method.kind == NormalizationKind::DotDensity ? cfg.preprocess.method.alpha : NormalizationMethod{}.alpha;
  c.target_size = cfg.preprocess.target_size;
  c.feature_spacing = cfg.preprocess.feature_spacing;
  c.aspect_guard_ratio = cfg.preprocess.aspect_guard_ratio;
  c.passes_coarse = cfg.link.passes_coarse;
  c.passes_fine = cfg.link.passes_fine;
  c.directional_threshold = cfg.directional_threshold;
  c.coarse_keep = cfg.coarse_keep;
  c.fine_keep = cfg.fine_keep;
  c.stroke_count_window = cfg.stroke_count_window;
  return c;
}

sl_records* pack(std::vector<RawCharacterRecord> records) {
  auto out = std::make_unique<sl_records>();
  out->packed.reserve(records.size());
  for (const auto& r : records) {
    sl_records::Packed p;
    for (const auto& s : r.strokes.strokes) {
      p.lengths.push_back(s.size());
      for (const auto& pt : s.points) {
        p.xy.push_back(pt.x);
        p.xy.push_back(pt.y);
      }
    }
    out->packed.push_back(std::move(p));
  }
  out->records = std::move(records);
  return out.release();
}

Character unpack(const std::int32_t* xy, const std::size_t* lengths, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "no strokes");
  if (!xy || !lengths) throw Error(ErrorCode::InvalidArgument, "null stroke data");
  Character k;
  std::size_t at = 0;
  for (std::size_t s = 0; s < count; ++s) {
    if (lengths[s] == 0) throw Error(ErrorCode::InvalidArgument, "empty stroke");
    Stroke stroke;
    stroke.points.reserve(lengths[s]);
    for (std::size_t i = 0; i < lengths[s]; ++i, at += 2) stroke.points.push_back({xy[at], xy[at + 1]});
    k.strokes.push_back(std::move(stroke));
  }
  return k;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sl_status null_arg(const char* what) { return fail(SL_ERR_INVALID_ARGUMENT, std::string("null argument: ") + what); }

sl_status emit(const HttpReply& r, int* http_status, char** response) {
  return guarded([&] {
    *response = copy_string(r.body);
    *http_status = r.status;
  });
}

}  // namespace

extern "C" {

const char* sl_version(void) { return "1.0.0"; }

const char* sl_status_string(sl_status status) {
  switch (status) {
    case SL_OK:
      return "ok";
    case SL_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case SL_ERR_PARSE:
      return "parse error";
    case SL_ERR_IO:
      return "I/O error";
    case SL_ERR_DUPLICATE_LABEL:
      return "duplicate label";
    case SL_ERR_EMPTY_STORE:
      return "empty template store";
    case SL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* sl_last_error(void) { return g_last_error.c_str(); }

void sl_config_default(sl_config* cfg) {
  if (cfg) *cfg = to_c(RecognizerConfig{});
}

const char* sl_normalization_name(sl_normalization n) {
  switch (n) {
    case SL_NORM_LINEAR:
    case SL_NORM_MOMENT:
    case SL_NORM_DOT_DENSITY:
    case SL_NORM_LINE_DENSITY:
      return normalization_name(static_cast<NormalizationKind>(n)).data();
  }
  return "unknown";
}

sl_status sl_normalization_from_name(const char* name, sl_normalization* out) {
  if (!name || !out) return null_arg("name/out");
  const auto kind = parse_normalization(name);
  if (!kind) return fail(SL_ERR_INVALID_ARGUMENT, std::string("unknown normalization: ") + name);
  *out = static_cast<sl_normalization>(*kind);
  return SL_OK;
}

sl_status sl_records_load(const char* path, sl_records** out) {
  if (!path || !out) return null_arg("path/out");
  return guarded([&] { *out = pack(load_records(path)); });
}

sl_status sl_records_parse(const char* text, size_t len, sl_records** out) {
  if ((!text && len) || !out) return null_arg("text/out");
  return guarded([&] { *out = pack(parse_records(std::string_view(text ? text : "", len))); });
}

void sl_records_free(sl_records* records) { delete records; }

size_t sl_records_count(const sl_records* records) { return records ? records->records.size() : 0; }

const char* sl_records_label(const sl_records* records, size_t index) {
  if (!records || index >= records->records.size()) return nullptr;
  const auto& label = records->records[index].label;
  return label ? label->c_str() : nullptr;
}

sl_status sl_records_strokes(const sl_records* records, size_t index, const int32_t** xy,
                             const size_t** stroke_lengths, size_t* stroke_count) {
  if (!records || !xy || !stroke_lengths || !stroke_count) return null_arg("records/xy/stroke_lengths/stroke_count");
  if (index >= records->packed.size()) return fail(SL_ERR_INVALID_ARGUMENT, "record index out of range");
  const auto& p = records->packed[index];
  *xy = p.xy.data();
  *stroke_lengths = p.lengths.data();
  *stroke_count = p.lengths.size();
  return SL_OK;
}

sl_status sl_recognizer_load(const char* path, const sl_config* cfg, sl_recognizer** out) {
  if (!path || !out) return null_arg("path/out");
  return guarded([&] {
    sl_config c;
    sl_config_default(&c);
    const RecognizerConfig rc = to_cpp(cfg ? *cfg : c);
    auto rec = std::make_shared<const Recognizer>(load_templates(path, rc.preprocess), rc);
    *out = new sl_recognizer{std::move(rec)};
  });
}

sl_status sl_recognizer_from_records(const sl_records* records, const sl_config* cfg, sl_recognizer** out) {
  if (!records || !out) return null_arg("records/out");
  return guarded([&] {
    sl_config c;
    sl_config_default(&c);
    const RecognizerConfig rc = to_cpp(cfg ? *cfg : c);
    auto rec = std::make_shared<const Recognizer>(build_store(records->records, rc.preprocess), rc);
    *out = new sl_recognizer{std::move(rec)};
  });
}

void sl_recognizer_free(sl_recognizer* rec) { delete rec; }

size_t sl_recognizer_template_count(const sl_recognizer* rec) { return rec ? rec->rec->store().size() : 0; }

sl_status sl_recognizer_get_config(const sl_recognizer* rec, sl_config* out) {
  if (!rec || !out) return null_arg("rec/out");
  *out = to_c(rec->rec->config());
  return SL_OK;
}

sl_status sl_recognizer_template_info(const sl_recognizer* rec, size_t index, const char** label,
                                      size_t* stroke_count, size_t* point_count) {
  if (!rec) return null_arg("rec");
  const auto& store = rec->rec->store();
  if (index >= store.size()) return fail(SL_ERR_INVALID_ARGUMENT, "template index out of range");
  const Template& t = store[index];
  if (label) *label = t.label.c_str();
  if (stroke_count) *stroke_count = t.character.size();
  if (point_count) {
    std::size_t n = 0;
    for (const auto& s : t.character.strokes) n += s.size();
    *point_count = n;
  }
  return SL_OK;
}

sl_status sl_recognize(const sl_recognizer* rec, const int32_t* xy, const size_t* stroke_lengths,
                       size_t stroke_count, size_t top, sl_candidates** out) {
  if (!rec || !out) return null_arg("rec/out");
  return guarded([&] {
    const Character raw = unpack(xy, stroke_lengths, stroke_count);
    *out = new sl_candidates{rec->rec->recognize(raw, top)};
  });
}

void sl_candidates_free(sl_candidates* c) { delete c; }

size_t sl_candidates_count(const sl_candidates* c) { return c ? c->items.size() : 0; }

const char* sl_candidates_label(const sl_candidates* c, size_t index) {
  if (!c || index >= c->items.size()) return nullptr;
  return c->items[index].label.c_str();
}

double sl_candidates_score(const sl_candidates* c, size_t index) {
  if (!c || index >= c->items.size()) return -1.0;
  return c->items[index].score;
}

sl_status sl_handle_recognize_json(const sl_recognizer* rec, const char* body, size_t len, int* http_status,
                                   char** response) {
  if ((!body && len) || !http_status || !response) return null_arg("body/http_status/response");
  return emit(handle_recognize(rec ? rec->rec.get() : nullptr, std::string_view(body ? body : "", len)),
              http_status, response);
}

sl_status sl_handle_health_json(const sl_recognizer* rec, int* http_status, char** response) {
  if (!http_status || !response) return null_arg("http_status/response");
  return emit(handle_health(rec ? rec->rec.get() : nullptr), http_status, response);
}

void sl_string_free(char* s) { std::free(s); }

sl_status sl_server_create(sl_server** out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = new sl_server; });
}

void sl_server_free(sl_server* server) { delete server; }

sl_status sl_server_set_recognizer(sl_server* server, const sl_recognizer* rec) {
  if (!server) return null_arg("server");
  server->server.set_recognizer(rec ? rec->rec : nullptr);
  return SL_OK;
}

int sl_server_bind(sl_server* server, const char* host, int port) {
  if (!server || !host) {
    null_arg("server/host");
    return -1;
  }
  const int bound = server->server.bind(host, port);
  if (bound < 0) fail(SL_ERR_IO, std::string("cannot bind ") + host + ":" + std::to_string(port));
  return bound;
}

sl_status sl_server_listen(sl_server* server) {
  if (!server) return null_arg("server");
  return server->server.listen() ? SL_OK : fail(SL_ERR_IO, "server stopped with an error");
}

void sl_server_stop(sl_server* server) {
  if (server) server->server.stop();
}

}  // extern "C"
