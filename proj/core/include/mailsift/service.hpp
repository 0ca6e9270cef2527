#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "mailsift/explain.hpp"
#include "mailsift/pipeline.hpp"

namespace mailsift {

inline constexpr std::size_t kMaxRequestBytes = 1 << 20;

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string cors_origin;          // empty: same-origin only
    std::filesystem::path static_dir; // optional UI bundle served at "/"
    ExplainConfig explain_defaults;
};

/// "host:port", ":port" or "port".
ServiceConfig parse_bind_address(std::string_view address, ServiceConfig base = {});

struct HttpResponse {
    int status = 200;
    std::string body;  // JSON
};

struct ServiceCounters {
    std::uint64_t requests = 0;
    std::uint64_t predictions = 0;
    std::uint64_t explanations = 0;
    std::uint64_t client_errors = 0;
};

/// JSON inference endpoints over one immutable pipeline. The handle_*
/// members are the transport-independent request logic; start()/run()
/// expose them over HTTP/1.1.
class InferenceService {
public:
    explicit InferenceService(ServiceConfig config = {});
    ~InferenceService();

    InferenceService(const InferenceService&) = delete;
    InferenceService& operator=(const InferenceService&) = delete;

    void load(std::shared_ptr<const Pipeline> pipeline);
    bool ready() const;

    HttpResponse handle_health() const;
    HttpResponse handle_predict(std::string_view body) const;
    HttpResponse handle_explain(std::string_view body) const;

    /// Binds the listener (port 0 picks a free port) and returns the port.
    int bind();
    /// Serves until stop(); requires bind().
    void run();
    void stop();

    ServiceCounters counters() const;

private:
    std::shared_ptr<const Pipeline> pipeline() const;
    HttpResponse client_error(int status, std::string_view message) const;

    struct Server;

    ServiceConfig config_;
    mutable std::mutex mutex_;
    std::shared_ptr<const Pipeline> pipeline_;
    std::unique_ptr<Server> server_;

    mutable std::atomic<std::uint64_t> requests_{0};
    mutable std::atomic<std::uint64_t> predictions_{0};
    mutable std::atomic<std::uint64_t> explanations_{0};
    mutable std::atomic<std::uint64_t> client_errors_{0};
};

}  // namespace mailsift
