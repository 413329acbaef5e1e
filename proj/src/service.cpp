#include "strokelink/service.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>

#include <httplib.h>
#include <json.hpp>

#include "strokelink/error.hpp"

namespace strokelink {
namespace {

using nlohmann::json;

HttpReply reply(int status, const json& body) { return {status, body.dump()}; }

HttpReply bad_request(const std::string& msg) { return reply(400, json{{"error", msg}}); }

HttpReply loading() { return reply(503, json{{"status", "loading"}}); }

bool to_coordinate(const json& v, int& out) {
  if (!v.is_number()) return false;
  const double d = v.get<double>();
  if (!std::isfinite(d) || std::abs(d) > std::numeric_limits<int>::max() / 2) return false;
  out = static_cast<int>(std::lround(d));
  return true;
}

json config_json(const RecognizerConfig& cfg) {
  const auto& pp = cfg.preprocess;
  json j{
      {"normalization", normalization_name(pp.method.kind)},
      {"target_size", pp.target_size},
      {"feature_spacing", pp.feature_spacing},
      {"aspect_guard_ratio", pp.aspect_guard_ratio},
      {"L_coarse", cfg.link.passes_coarse},
      {"L_fine", cfg.link.passes_fine},
      {"S", cfg.directional_threshold},
      {"coarse_keep", cfg.coarse_keep},
      {"fine_keep", cfg.fine_keep},
  };
  if (pp.method.kind == NormalizationKind::DotDensity) j["alpha"] = pp.method.alpha;
  return j;
}

}  // namespace

HttpReply handle_recognize(const Recognizer* rec, std::string_view body) {
  if (!rec) return loading();

  const json req = json::parse(body, nullptr, false);
  if (req.is_discarded()) return bad_request("request body is not valid JSON");
  if (!req.is_object()) return bad_request("request body must be a JSON object");

  const auto strokes = req.find("strokes");
  if (strokes == req.end() || !strokes->is_array()) return bad_request("'strokes' must be an array");
  if (strokes->empty()) return bad_request("'strokes' must not be empty");

  std::size_t top = rec->config().fine_keep;
  if (const auto t = req.find("top"); t != req.end()) {
    if (!t->is_number_integer()) return bad_request("'top' must be an integer");
    const auto v = t->get<long long>();
    if (v < 1 || v > static_cast<long long>(kMaxTop)) return bad_request("'top' must be in [1, 50]");
    top = static_cast<std::size_t>(v);
  }

  Character raw;
  for (std::size_t i = 0; i < strokes->size(); ++i) {
    const json& s = (*strokes)[i];
    if (!s.is_array() || s.empty()) return bad_request("stroke " + std::to_string(i) + " must be a non-empty array");
    Stroke stroke;
    for (const json& p : s) {
      Point pt;
      if (!p.is_array() || p.size() != 2 || !to_coordinate(p[0], pt.x) || !to_coordinate(p[1], pt.y))
        return bad_request("stroke " + std::to_string(i) + " has a point that is not [x, y]");
      stroke.points.push_back(pt);
    }
    raw.strokes.push_back(std::move(stroke));
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const auto candidates = rec->recognize(raw, top);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    json out{{"candidates", json::array()}, {"timing_ms", ms}};
    for (const auto& c : candidates) out["candidates"].push_back({{"label", c.label}, {"score", c.score}});
    return reply(200, out);
  } catch (const std::exception& e) {
    return reply(500, json{{"error", e.what()}});
  }
}

HttpReply handle_health(const Recognizer* rec) {
  if (!rec) return loading();
  return reply(200, json{{"status", "ok"}, {"template_count", rec->store().size()}, {"config", config_json(rec->config())}});
}

struct Server::Impl {
  httplib::Server http;
  mutable std::mutex mu;
  std::shared_ptr<const Recognizer> rec;

  std::shared_ptr<const Recognizer> current() const {
    std::lock_guard lock(mu);
    return rec;
  }
};

Server::Server() : impl_(std::make_unique<Impl>()) {
  auto& http = impl_->http;
  http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                            {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                            {"Access-Control-Allow-Headers", "Content-Type"}});
  const auto send = [](httplib::Response& res, const HttpReply& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  };
  http.Post("/recognize", [this, send](const httplib::Request& req, httplib::Response& res) {
    const auto rec = impl_->current();
    send(res, handle_recognize(rec.get(), req.body));
  });
  http.Get("/health", [this, send](const httplib::Request&, httplib::Response& res) {
    const auto rec = impl_->current();
    send(res, handle_health(rec.get()));
  });
  http.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

Server::~Server() { stop(); }

void Server::set_recognizer(std::shared_ptr<const Recognizer> rec) {
  std::lock_guard lock(impl_->mu);
  impl_->rec = std::move(rec);
}

std::shared_ptr<const Recognizer> Server::recognizer() const { return impl_->current(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(host);
  return impl_->http.bind_to_port(host, port) ? port : -1;
}

bool Server::listen() { return impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_) impl_->http.stop();
}

bool Server::running() const { return impl_->http.is_running(); }

}  // namespace strokelink
