#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mailsift/artifact.hpp"
#include "mailsift/service.hpp"

namespace mailsift::cli {

namespace {

// Artifact-side I/O failures exit with kArtifactError rather than kDataError.
struct ArtifactFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const ArtifactFailure& e) {
        err << "error: " << e.what() << '\n';
        return kArtifactError;
    } catch (const UsageFailure& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

std::shared_ptr<const Pipeline> open_artifact(const std::filesystem::path& path) {
    if (path.empty()) throw UsageFailure("no artifact given");
    try {
        return std::make_shared<const Pipeline>(load_artifact(path));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::IoError) throw ArtifactFailure(e.what());
        throw;
    }
}

std::string input_text(const std::string& text, const std::filesystem::path& file) {
    if (!text.empty()) return text;
    if (!file.empty()) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw Error(ErrorKind::IoError, "cannot read " + file.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        if (!ss.str().empty()) return ss.str();
    }
    throw UsageFailure("email text is empty; pass --text or --file");
}

void write_reports(std::ostream& out, const ReportRow& row, const std::filesystem::path& csv_path) {
    const std::span<const ReportRow> rows(&row, 1);
    write_report_table(out, rows);
    out << '\n';
    write_report_csv(out, rows);
    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw Error(ErrorKind::IoError, "cannot write " + csv_path.string());
        write_report_csv(csv, rows);
    }
}

// Maps a JSON error body from the service handlers to a CLI exit.
int service_failure(const HttpResponse& r, std::ostream& err) {
    const auto body = nlohmann::json::parse(r.body, nullptr, false);
    const std::string msg = body.is_object() && body.contains("error") ? body["error"].get<std::string>() : r.body;
    err << "error: " << msg << '\n';
    if (r.status == 400) return kUsage;
    if (r.status == 422) return kDataError;
    return kInternal;
}

std::atomic<InferenceService*> g_serving{nullptr};

extern "C" void handle_stop_signal(int) {
    if (auto* s = g_serving.load()) s->stop();
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::BadRatio:
            return kUsage;
        case ErrorKind::UnsupportedVersion:
        case ErrorKind::CorruptArtifact:
        case ErrorKind::ModelVectorizerMismatch:
        case ErrorKind::DimensionMismatch:
            return kArtifactError;
        case ErrorKind::MissingColumn:
        case ErrorKind::IoError:
        case ErrorKind::EmptyDataset:
        case ErrorKind::BadManifest:
        case ErrorKind::EmptyCorpus:
        case ErrorKind::NoTokensAboveMinCount:
        case ErrorKind::SingleClassData:
        case ErrorKind::NegativeFeature:
        case ErrorKind::LengthMismatch:
        case ErrorKind::EmptyInput:
        case ErrorKind::EmptyDocument:
            return kDataError;
    }
    return kInternal;
}

int cmd_ingest(const IngestOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        IngestReport report;
        const Corpus corpus = load_manifest(opts.manifest, opts.fields, &report);
        for (std::size_t i = 0; i < report.loaded.size(); ++i) {
            out << std::left << std::setw(28) << report.loaded[i].first << " rows " << report.loaded[i].second
                << "  dropped " << report.dropped[i].second << '\n';
        }
        const auto counts = corpus.class_counts();
        out << "records " << corpus.size() << "  spam " << counts.spam << "  ham " << counts.ham
            << "  blank dropped " << corpus.dropped_blank() << '\n'
            << "fingerprint " << corpus.fingerprint() << '\n';
        return kOk;
    });
}

int cmd_train(const TrainOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const Corpus corpus = load_manifest(opts.manifest, opts.fields);
        auto outcome = train_pipeline(corpus, opts.config, [&](const std::string& msg) { err << msg << '\n'; });
        if (opts.created_at) outcome.pipeline.metadata.created_at = *opts.created_at;
        if (!opts.out.empty()) {
            try {
                save_artifact(outcome.pipeline, opts.out);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::IoError) throw ArtifactFailure(e.what());
                throw;
            }
            err << "wrote " << opts.out.string() << '\n';
        }
        write_reports(out, outcome.report, opts.report_csv);
        return kOk;
    });
}

int cmd_evaluate(const EvaluateOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const auto pipeline = open_artifact(opts.artifact);
        const Corpus corpus = load_manifest(opts.manifest, opts.fields);
        const auto& meta = pipeline->metadata;
        if (!meta.corpus_fingerprint.empty() && meta.corpus_fingerprint != corpus.fingerprint()) {
            err << "warning: corpus differs from the one this artifact was trained on\n";
        }
        const auto s = split(corpus, opts.test_ratio.value_or(meta.test_ratio), opts.seed.value_or(meta.split_seed));
        const Metrics m = evaluate_rows(*pipeline, corpus, s.test);
        ReportRow row = make_report_row(*pipeline, m);
        row.dataset = dataset_label(corpus.class_counts());
        write_reports(out, row, opts.report_csv);
        return kOk;
    });
}

int cmd_predict(const PredictOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const auto text = input_text(opts.text, opts.file);
        InferenceService service;
        service.load(open_artifact(opts.artifact));
        const auto r = service.handle_predict(nlohmann::json{{"text", text}}.dump());
        if (r.status != 200) return service_failure(r, err);
        if (opts.json) {
            out << r.body << '\n';
        } else {
            const auto body = nlohmann::json::parse(r.body);
            out << body["label"].get<std::string>() << " (score " << std::fixed << std::setprecision(4)
                << body["score"].get<double>() << ", model " << body["model"].get<std::string>() << ")\n";
        }
        return kOk;
    });
}

int cmd_explain(const ExplainOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        const auto text = input_text(opts.text, opts.file);
        opts.config.validate();
        ServiceConfig cfg;
        cfg.explain_defaults = opts.config;
        InferenceService service(cfg);
        service.load(open_artifact(opts.artifact));
        const auto r = service.handle_explain(nlohmann::json{{"text", text}}.dump());
        if (r.status != 200) return service_failure(r, err);
        if (opts.json) {
            out << r.body << '\n';
            return kOk;
        }
        const auto body = nlohmann::json::parse(r.body);
        out << std::fixed << std::setprecision(4);
        out << "Not Spam " << body["probabilities"]["ham"].get<double>() << "   Spam "
            << body["probabilities"]["spam"].get<double>() << "   (surrogate fit " << body["fit"].get<double>()
            << ")\n";
        for (const auto& t : body["tokens"]) {
            const double w = t["weight"].get<double>();
            out << "  " << std::left << std::setw(20) << t["token"].get<std::string>() << std::right << std::setw(5)
                << t["position"].get<std::size_t>() << "  " << std::showpos << w << std::noshowpos << "  "
                << (w > 0 ? "spam" : "not spam") << '\n';
        }
        return kOk;
    });
}

int cmd_serve(const ServeOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() -> int {
        auto artifact = opts.artifact;
        if (artifact.empty()) {
            if (const char* env = std::getenv("MAILSIFT_ARTIFACT")) artifact = env;
        }
        std::string address = opts.address;
        if (address.empty()) {
            const char* env = std::getenv("MAILSIFT_ADDR");
            address = env ? env : "127.0.0.1:8080";
        }
        ServiceConfig cfg = parse_bind_address(address);
        cfg.cors_origin = opts.cors_origin;
        cfg.static_dir = opts.static_dir;

        const auto pipeline = open_artifact(artifact);
        InferenceService service(cfg);
        service.load(pipeline);
        const int port = service.bind();
        out << "loaded " << to_string(pipeline->vectorizer_kind()) << '+' << to_string(pipeline->model_kind())
            << " from " << artifact.string() << '\n';
        out << "listening on http://" << cfg.host << ":" << port << std::endl;
        g_serving = &service;
        std::signal(SIGINT, handle_stop_signal);
        std::signal(SIGTERM, handle_stop_signal);
        service.run();
        g_serving = nullptr;
        return kOk;
    });
}

}  // namespace mailsift::cli
