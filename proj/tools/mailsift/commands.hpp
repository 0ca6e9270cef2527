#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "mailsift/corpus.hpp"
#include "mailsift/error.hpp"
#include "mailsift/explain.hpp"
#include "mailsift/training.hpp"

namespace mailsift::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kDataError = 3,
    kArtifactError = 4,
    kInternal = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

struct IngestOptions {
    std::filesystem::path manifest;
    TextFields fields = TextFields::Combined;
};

struct TrainOptions {
    std::filesystem::path manifest;
    TrainConfig config;
    TextFields fields = TextFields::Combined;
    std::filesystem::path out;         // artifact path; empty skips writing
    std::filesystem::path report_csv;  // optional
    std::optional<std::int64_t> created_at;
};

struct EvaluateOptions {
    std::filesystem::path artifact;
    std::filesystem::path manifest;
    std::optional<double> test_ratio;      // default: the artifact's
    std::optional<std::uint64_t> seed;     // default: the artifact's
    TextFields fields = TextFields::Combined;
    std::filesystem::path report_csv;
};

struct PredictOptions {
    std::filesystem::path artifact;
    std::string text;
    std::filesystem::path file;
    bool json = false;
};

struct ExplainOptions {
    std::filesystem::path artifact;
    std::string text;
    std::filesystem::path file;
    ExplainConfig config;
    bool json = false;
};

struct ServeOptions {
    std::filesystem::path artifact;  // falls back to MAILSIFT_ARTIFACT
    std::string address;             // falls back to MAILSIFT_ADDR, then 127.0.0.1:8080
    std::string cors_origin;
    std::filesystem::path static_dir;
};

int cmd_ingest(const IngestOptions& opts, std::ostream& out, std::ostream& err);
int cmd_train(const TrainOptions& opts, std::ostream& out, std::ostream& err);
int cmd_evaluate(const EvaluateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_predict(const PredictOptions& opts, std::ostream& out, std::ostream& err);
int cmd_explain(const ExplainOptions& opts, std::ostream& out, std::ostream& err);
int cmd_serve(const ServeOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mailsift::cli
