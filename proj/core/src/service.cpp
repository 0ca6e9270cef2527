#include "mailsift/service.hpp"

#include <httplib.h>

#include <charconv>
#include <json.hpp>

#include "mailsift/artifact.hpp"
#include "mailsift/error.hpp"

namespace mailsift {

using nlohmann::json;

struct InferenceService::Server {
    httplib::Server http;
    int port = -1;
};

ServiceConfig parse_bind_address(std::string_view address, ServiceConfig base) {
    std::string_view port_part = address;
    if (auto colon = address.rfind(':'); colon != std::string_view::npos) {
        if (colon > 0) base.host = std::string(address.substr(0, colon));
        port_part = address.substr(colon + 1);
    }
    int port = -1;
    const auto [ptr, ec] = std::from_chars(port_part.data(), port_part.data() + port_part.size(), port);
    if (ec != std::errc{} || ptr != port_part.data() + port_part.size() || port < 0 || port > 65535) {
        throw Error(ErrorKind::InvalidArgument, "bad bind address '" + std::string(address) + "'");
    }
    base.port = port;
    return base;
}

InferenceService::InferenceService(ServiceConfig config) : config_(std::move(config)) {}

InferenceService::~InferenceService() { stop(); }

void InferenceService::load(std::shared_ptr<const Pipeline> pipeline) {
    if (pipeline) pipeline->validate();
    std::lock_guard lock(mutex_);
    pipeline_ = std::move(pipeline);
}

std::shared_ptr<const Pipeline> InferenceService::pipeline() const {
    std::lock_guard lock(mutex_);
    return pipeline_;
}

bool InferenceService::ready() const { return pipeline() != nullptr; }

ServiceCounters InferenceService::counters() const {
    return {requests_.load(), predictions_.load(), explanations_.load(), client_errors_.load()};
}

HttpResponse InferenceService::client_error(int status, std::string_view message) const {
    ++client_errors_;
    return {status, json{{"error", message}}.dump()};
}

HttpResponse InferenceService::handle_health() const {
    ++requests_;
    const auto p = pipeline();
    if (!p) return {503, json{{"status", "unavailable"}}.dump()};
    json body{{"status", "ok"},
              {"model", to_string(p->model_kind())},
              {"vectorizer", to_string(p->vectorizer_kind())},
              {"format_version", kArtifactFormatVersion}};
    return {200, body.dump()};
}

namespace {

std::optional<std::string> positive_int(const json& body, const char* key, std::size_t& out) {
    if (!body.contains(key)) return std::nullopt;
    const auto& v = body[key];
    if (!v.is_number_integer() || v.get<long long>() <= 0) return std::string(key) + " must be a positive integer";
    out = v.get<std::size_t>();
    return std::nullopt;
}

}  // namespace

HttpResponse InferenceService::handle_predict(std::string_view raw) const {
    ++requests_;
    if (raw.size() > kMaxRequestBytes) return client_error(413, "request body exceeds 1 MiB");
    const auto p = pipeline();
    if (!p) return {503, json{{"error", "no model loaded"}}.dump()};

    const json body = json::parse(raw, nullptr, false);
    if (body.is_discarded() || !body.is_object()) return client_error(400, "body must be a JSON object");
    if (!body.contains("text") || !body["text"].is_string()) return client_error(400, "missing \"text\"");
    const auto text = body["text"].get<std::string>();
    if (text.empty()) return client_error(400, "\"text\" is empty");

    const auto tokens = p->tokenize(text);
    if (tokens.empty()) return client_error(422, "text has no analyzable tokens");
    const auto pred = p->predict_tokens(tokens);
    ++predictions_;
    json out{{"label", pred.label == Label::Spam ? "spam" : "ham"},
             {"score", pred.score},
             {"model", to_string(p->model_kind())}};
    return {200, out.dump()};
}

HttpResponse InferenceService::handle_explain(std::string_view raw) const {
    ++requests_;
    if (raw.size() > kMaxRequestBytes) return client_error(413, "request body exceeds 1 MiB");
    const auto p = pipeline();
    if (!p) return {503, json{{"error", "no model loaded"}}.dump()};

    const json body = json::parse(raw, nullptr, false);
    if (body.is_discarded() || !body.is_object()) return client_error(400, "body must be a JSON object");
    if (!body.contains("text") || !body["text"].is_string()) return client_error(400, "missing \"text\"");
    const auto text = body["text"].get<std::string>();
    if (text.empty()) return client_error(400, "\"text\" is empty");

    ExplainConfig cfg = config_.explain_defaults;
    if (auto err = positive_int(body, "top_k", cfg.top_k)) return client_error(400, *err);
    if (auto err = positive_int(body, "n_samples", cfg.n_samples)) return client_error(400, *err);
    if (body.contains("seed")) {
        if (!body["seed"].is_number_integer() || body["seed"].get<long long>() < 0) {
            return client_error(400, "seed must be a non-negative integer");
        }
        cfg.seed = body["seed"].get<std::uint64_t>();
    }

    const auto spans = preprocess_with_spans(text, p->prep);
    if (spans.empty()) return client_error(422, "text has no analyzable tokens");
    TokenSequence tokens;
    tokens.reserve(spans.size());
    for (const auto& s : spans) tokens.push_back(s.token);

    const auto e = explain_tokens(
        tokens, [&](const TokenSequence& t) { return p->predict_tokens(t).score; }, cfg);
    ++explanations_;

    json token_list = json::array();
    for (const auto& tw : e.token_weights) {
        token_list.push_back({{"token", tw.token},
                              {"position", tw.position},
                              {"weight", tw.weight},
                              {"start", spans[tw.position].begin},
                              {"end", spans[tw.position].end}});
    }
    json out{{"probabilities", {{"ham", e.p_ham}, {"spam", e.p_spam}}},
             {"tokens", std::move(token_list)},
             {"fit", e.surrogate_fit},
             {"model", to_string(p->model_kind())}};
    return {200, out.dump()};
}

int InferenceService::bind() {
    server_ = std::make_unique<Server>();
    auto& http = server_->http;
    http.set_payload_max_length(kMaxRequestBytes);

    auto reply = [this](httplib::Response& res, const HttpResponse& r) {
        res.status = r.status;
        res.set_content(r.body, "application/json");
        if (!config_.cors_origin.empty()) res.set_header("Access-Control-Allow-Origin", config_.cors_origin);
    };
    http.Get("/health", [this, reply](const httplib::Request&, httplib::Response& res) { reply(res, handle_health()); });
    http.Post("/predict", [this, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_predict(req.body));
    });
    http.Post("/explain", [this, reply](const httplib::Request& req, httplib::Response& res) {
        reply(res, handle_explain(req.body));
    });
    if (!config_.cors_origin.empty()) {
        http.Options(R"(/(predict|explain|health))", [this](const httplib::Request&, httplib::Response& res) {
            res.status = 204;
            res.set_header("Access-Control-Allow-Origin", config_.cors_origin);
            res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
            res.set_header("Access-Control-Allow-Headers", "Content-Type");
        });
    }
    if (!config_.static_dir.empty() && !http.set_mount_point("/", config_.static_dir.string())) {
        throw Error(ErrorKind::IoError, "cannot serve static files from " + config_.static_dir.string());
    }

    if (config_.port == 0) {
        server_->port = http.bind_to_any_port(config_.host);
    } else {
        server_->port = http.bind_to_port(config_.host, config_.port) ? config_.port : -1;
    }
    if (server_->port < 0) {
        throw Error(ErrorKind::IoError, "cannot bind " + config_.host + ":" + std::to_string(config_.port));
    }
    return server_->port;
}

void InferenceService::run() {
    if (!server_) throw Error(ErrorKind::InvalidArgument, "run() before bind()");
    server_->http.listen_after_bind();
}

void InferenceService::stop() {
    if (server_) server_->http.stop();
}

}  // namespace mailsift
