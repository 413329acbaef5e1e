#include <strokelink/strokelink.h>

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "eval_report.hpp"

namespace {

enum Exit { kOk = 0, kOther = 1, kUsage = 2, kParse = 3, kIo = 4 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(sl_status s) {
  switch (s) {
    case SL_OK:
      return kOk;
    case SL_ERR_PARSE:
      return kParse;
    case SL_ERR_IO:
      return kIo;
    case SL_ERR_DUPLICATE_LABEL:
    case SL_ERR_EMPTY_STORE:
      return kParse;
    case SL_ERR_INVALID_ARGUMENT:
      return kUsage;
    default:
      return kOther;
  }
}

void check(sl_status s, const std::string& what) {
  if (s == SL_OK) return;
  std::string msg = what + ": " + sl_status_string(s);
  if (const char* detail = sl_last_error(); detail && *detail) msg += ": " + std::string(detail);
  throw Failure{exit_for(s), msg};
}

struct RecordsDeleter {
  void operator()(sl_records* r) const { sl_records_free(r); }
};
struct RecognizerDeleter {
  void operator()(sl_recognizer* r) const { sl_recognizer_free(r); }
};
struct CandidatesDeleter {
  void operator()(sl_candidates* c) const { sl_candidates_free(c); }
};
struct ServerDeleter {
  void operator()(sl_server* s) const { sl_server_free(s); }
};
using Records = std::unique_ptr<sl_records, RecordsDeleter>;
using Recognizer = std::unique_ptr<sl_recognizer, RecognizerDeleter>;
using Candidates = std::unique_ptr<sl_candidates, CandidatesDeleter>;
using Server = std::unique_ptr<sl_server, ServerDeleter>;

struct Flags {
  std::string normalization;
  std::optional<int> alpha;
  std::optional<int> l_coarse;
  std::optional<int> l_fine;
  std::optional<int> s;
  std::optional<std::size_t> top;
  std::optional<std::size_t> coarse_keep;
  bool json = false;
};

void add_config_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--normalization", f.normalization, "linear, moment, dot-density or line-density")
      ->check(CLI::IsMember({"linear", "moment", "dot-density", "line-density"}));
  cmd->add_option("--alpha", f.alpha, "Dot density exponent")->check(CLI::PositiveNumber);
  cmd->add_option("--L-coarse", f.l_coarse, "Improvement passes for the coarse stage")->check(CLI::NonNegativeNumber);
  cmd->add_option("--L-fine", f.l_fine, "Improvement passes for the fine stage")->check(CLI::NonNegativeNumber);
  cmd->add_option("--S", f.s, "Directional distance below this input stroke count")->check(CLI::NonNegativeNumber);
  cmd->add_option("--top", f.top, "Candidates to report")->check(CLI::PositiveNumber);
  cmd->add_option("--coarse-keep", f.coarse_keep, "Candidates kept after the coarse stage")
      ->check(CLI::PositiveNumber);
}

sl_config make_config(const Flags& f) {
  sl_config c;
  sl_config_default(&c);
  if (!f.normalization.empty()) check(sl_normalization_from_name(f.normalization.c_str(), &c.normalization), "normalization");
  if (f.alpha) c.alpha = *f.alpha;
  if (f.l_coarse) c.passes_coarse = *f.l_coarse;
  if (f.l_fine) c.passes_fine = *f.l_fine;
  if (f.s) c.directional_threshold = *f.s;
  if (f.coarse_keep) c.coarse_keep = *f.coarse_keep;
  if (f.top) {
    c.fine_keep = *f.top;
    if (c.coarse_keep < c.fine_keep) c.coarse_keep = c.fine_keep;
  }
  return c;
}

Recognizer load_recognizer(const std::string& path, const sl_config& cfg) {
  sl_recognizer* r = nullptr;
  check(sl_recognizer_load(path.c_str(), &cfg, &r), path);
  return Recognizer(r);
}

Records load_records(const std::string& path) {
  sl_records* r = nullptr;
  check(sl_records_load(path.c_str(), &r), path);
  return Records(r);
}

struct Ranked {
  std::vector<std::string> labels;
  std::vector<double> scores;
  double ms = 0;
};

Ranked recognize_record(const sl_recognizer* rec, const sl_records* records, std::size_t index, std::size_t top) {
  const int32_t* xy = nullptr;
  const size_t* lengths = nullptr;
  size_t count = 0;
  check(sl_records_strokes(records, index, &xy, &lengths, &count), "record " + std::to_string(index + 1));
  sl_candidates* raw = nullptr;
  const auto t0 = std::chrono::steady_clock::now();
  const sl_status s = sl_recognize(rec, xy, lengths, count, top, &raw);
  const auto t1 = std::chrono::steady_clock::now();
  check(s, "recognize record " + std::to_string(index + 1));
  Candidates c(raw);
  Ranked out;
  out.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  for (size_t i = 0; i < sl_candidates_count(c.get()); ++i) {
    out.labels.emplace_back(sl_candidates_label(c.get(), i));
    out.scores.push_back(sl_candidates_score(c.get(), i));
  }
  return out;
}

std::string config_line(const sl_config& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "normalization %s  alpha %d  L-coarse %d  L-fine %d  S %d  coarse-keep %zu  top %zu",
                sl_normalization_name(c.normalization), c.alpha, c.passes_coarse, c.passes_fine,
                c.directional_threshold, c.coarse_keep, c.fine_keep);
  return buf;
}

nlohmann::json config_json(const sl_config& c) {
  return {{"normalization", sl_normalization_name(c.normalization)},
          {"alpha", c.alpha},
          {"L_coarse", c.passes_coarse},
          {"L_fine", c.passes_fine},
          {"S", c.directional_threshold},
          {"coarse_keep", c.coarse_keep},
          {"top", c.fine_keep}};
}

int run_recognize(const std::string& templates, const std::string& input, const Flags& f) {
  const sl_config cfg = make_config(f);
  Recognizer rec = load_recognizer(templates, cfg);
  Records in = load_records(input);
  const std::size_t n = sl_records_count(in.get());
  if (n == 0) throw Failure{kParse, input + ": no input character"};
  nlohmann::json all = nlohmann::json::array();
  for (std::size_t k = 0; k < n; ++k) {
    const Ranked r = recognize_record(rec.get(), in.get(), k, cfg.fine_keep);
    if (f.json) {
      nlohmann::json cands = nlohmann::json::array();
      for (std::size_t i = 0; i < r.labels.size(); ++i) cands.push_back({{"label", r.labels[i]}, {"score", r.scores[i]}});
      all.push_back({{"candidates", cands}, {"ms", r.ms}});
      continue;
    }
    if (n > 1) std::printf("%s# input %zu\n", k ? "\n" : "", k + 1);
    for (std::size_t i = 0; i < r.labels.size(); ++i) std::printf("%zu %s %.3f\n", i + 1, r.labels[i].c_str(), r.scores[i]);
  }
  if (f.json) std::cout << all.dump(2) << '\n';
  return kOk;
}

// Labeled records become (expected, ranked) pairs; unlabeled records are an input error.
slcli::EvalReport evaluate(const sl_recognizer* rec, const sl_records* set, const std::string& path, std::size_t top) {
  slcli::EvalAccumulator acc;
  for (std::size_t k = 0; k < sl_records_count(set); ++k) {
    const char* label = sl_records_label(set, k);
    if (!label) throw Failure{kParse, path + ": record " + std::to_string(k + 1) + " has no label"};
    const Ranked r = recognize_record(rec, set, k, top);
    acc.add(label, r.labels, r.ms);
  }
  return acc.report();
}

int run_eval(const std::string& templates, const std::string& testset, const Flags& f) {
  sl_config cfg = make_config(f);
  if (!f.top) cfg.fine_keep = std::max<std::size_t>(cfg.fine_keep, 10);
  if (cfg.coarse_keep < cfg.fine_keep) cfg.coarse_keep = cfg.fine_keep;
  Recognizer rec = load_recognizer(templates, cfg);
  Records set = load_records(testset);
  const slcli::EvalReport report = evaluate(rec.get(), set.get(), testset, cfg.fine_keep);
  if (f.json) {
    nlohmann::json j = slcli::report_json(report);
    j["config"] = config_json(cfg);
    j["templates"] = sl_recognizer_template_count(rec.get());
    std::cout << j.dump(2) << '\n';
  } else {
    std::printf("%s\ntemplates %zu\n\n%s", config_line(cfg).c_str(), sl_recognizer_template_count(rec.get()),
                slcli::format_report(report).c_str());
  }
  return kOk;
}

int run_bench(const std::string& templates, const std::string& testset, const Flags& f) {
  const sl_config cfg = make_config(f);
  Recognizer rec = load_recognizer(templates, cfg);
  Records set = load_records(testset);
  slcli::EvalAccumulator acc;
  for (std::size_t k = 0; k < sl_records_count(set.get()); ++k) {
    const Ranked r = recognize_record(rec.get(), set.get(), k, cfg.fine_keep);
    const char* label = sl_records_label(set.get(), k);
    acc.add(label ? label : "", r.labels, r.ms);
  }
  const slcli::Timing t = acc.report().timing;
  if (f.json) {
    std::cout << nlohmann::json{{"config", config_json(cfg)},
                                {"templates", sl_recognizer_template_count(rec.get())},
                                {"timing_ms", {{"count", t.count}, {"min", t.min_ms}, {"max", t.max_ms}, {"avg", t.avg_ms}}}}
                     .dump(2)
              << '\n';
  } else {
    std::printf("%s\ntemplates %zu\n%s\n", config_line(cfg).c_str(), sl_recognizer_template_count(rec.get()),
                slcli::format_timing(t).c_str());
  }
  return kOk;
}

int run_inspect(const std::string& templates, const Flags& f) {
  const sl_config cfg = make_config(f);
  Recognizer rec = load_recognizer(templates, cfg);
  const std::size_t n = sl_recognizer_template_count(rec.get());
  nlohmann::json rows = nlohmann::json::array();
  if (!f.json) std::printf("%s\ntemplates %zu\n", config_line(cfg).c_str(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const char* label = nullptr;
    size_t strokes = 0, points = 0;
    check(sl_recognizer_template_info(rec.get(), i, &label, &strokes, &points), "template " + std::to_string(i + 1));
    if (f.json)
      rows.push_back({{"label", label}, {"strokes", strokes}, {"points", points}});
    else
      std::printf("%zu %s strokes %zu points %zu\n", i + 1, label, strokes, points);
  }
  if (f.json) std::cout << nlohmann::json{{"config", config_json(cfg)}, {"templates", rows}}.dump(2) << '\n';
  return kOk;
}

std::atomic<sl_server*> g_server{nullptr};

extern "C" void on_signal(int) {
  if (sl_server* s = g_server.load()) sl_server_stop(s);
}

int run_serve(const std::string& templates, const std::string& host, int port, const Flags& f) {
  const sl_config cfg = make_config(f);
  sl_server* raw = nullptr;
  check(sl_server_create(&raw), "server");
  Server server(raw);
  const int bound = sl_server_bind(server.get(), host.c_str(), port);
  if (bound < 0) throw Failure{kIo, "cannot bind " + host + ":" + std::to_string(port)};
  std::fprintf(stderr, "listening on http://%s:%d\n", host.c_str(), bound);

  std::atomic<int> load_exit{kOk};
  std::string load_error;
  std::thread loader([&] {
    try {
      Recognizer rec = load_recognizer(templates, cfg);
      check(sl_server_set_recognizer(server.get(), rec.get()), "server");
      std::fprintf(stderr, "loaded %zu templates\n", sl_recognizer_template_count(rec.get()));
    } catch (const Failure& e) {
      load_error = e.message;
      load_exit = e.code;
      sl_server_stop(server.get());
    }
  });

  g_server = server.get();
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  const sl_status s = sl_server_listen(server.get());
  g_server = nullptr;
  loader.join();
  if (load_exit != kOk) throw Failure{load_exit, load_error};
  check(s, "server");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stroke-order and stroke-count free online handwriting recognizer", "strokelink"};
  app.require_subcommand(1);
  app.set_version_flag("--version", sl_version());

  Flags flags;
  std::string templates, input, testset, host = "127.0.0.1";
  int port = 8080;

  auto* rec = app.add_subcommand("recognize", "Rank templates for each input character");
  rec->add_option("templates", templates, "Template file")->required();
  rec->add_option("input", input, "Input records, - for stdin")->required();
  add_config_flags(rec, flags);
  rec->add_flag("--json", flags.json, "JSON output");

  auto* eval = app.add_subcommand("eval", "Top-1/5/10 accuracy over a labeled test set");
  eval->add_option("templates", templates, "Template file")->required();
  eval->add_option("testset", testset, "Labeled test records, - for stdin")->required();
  add_config_flags(eval, flags);
  eval->add_flag("--json", flags.json, "JSON output");

  auto* bench = app.add_subcommand("bench", "Per-character recognition timing");
  bench->add_option("templates", templates, "Template file")->required();
  bench->add_option("testset", testset, "Test records, - for stdin")->required();
  add_config_flags(bench, flags);
  bench->add_flag("--json", flags.json, "JSON output");

  auto* inspect = app.add_subcommand("inspect", "List stored templates");
  inspect->add_option("templates", templates, "Template file")->required();
  add_config_flags(inspect, flags);
  inspect->add_flag("--json", flags.json, "JSON output");

  auto* serve = app.add_subcommand("serve", "HTTP recognition endpoint");
  serve->add_option("templates", templates, "Template file")->required();
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--port", port, "Port, 0 picks a free one")->capture_default_str()->check(CLI::Range(0, 65535));
  add_config_flags(serve, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rec) return run_recognize(templates, input, flags);
    if (*eval) return run_eval(templates, testset, flags);
    if (*bench) return run_bench(templates, testset, flags);
    if (*inspect) return run_inspect(templates, flags);
    if (*serve) return run_serve(templates, host, port, flags);
  } catch (const Failure& e) {
    std::fprintf(stderr, "strokelink: %s\n", e.message.c_str());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "strokelink: %s\n", e.what());
    return kOther;
  }
  return kUsage;
}
