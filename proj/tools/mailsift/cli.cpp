#include <CLI11.hpp>

#include "commands.hpp"

namespace mailsift::cli {

namespace {

const std::map<std::string, TextFields> kFields{{"combined", TextFields::Combined}, {"body", TextFields::BodyOnly}};
const std::map<std::string, VectorizerKind> kVectorizers{{"tfidf", VectorizerKind::TfIdf},
                                                         {"word2vec", VectorizerKind::Word2Vec}};
const std::map<std::string, ModelKind> kModels{{"svm", ModelKind::Svm}, {"mnb", ModelKind::Mnb}, {"rf", ModelKind::Rf}};
const std::map<std::string, FeatureInput> kMnbInputs{{"tfidf", FeatureInput::TfIdf}, {"counts", FeatureInput::Counts}};

void add_prep_flags(CLI::App& cmd, std::filesystem::path& stopwords) {
    cmd.add_option("--stopwords", stopwords, "Stop-word list, one word per line (default: built-in English)")
        ->check(CLI::ExistingFile);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"mailsift: spam and phishing email classification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "mailsift 0.1.0");

    // ingest
    IngestOptions ingest;
    auto* c_ingest = app.add_subcommand("ingest", "Load a manifest and report corpus statistics");
    c_ingest->add_option("--manifest,-m", ingest.manifest, "Dataset manifest")->required();
    c_ingest->add_option("--fields", ingest.fields, "Text fields: combined|body")
        ->transform(CLI::CheckedTransformer(kFields, CLI::ignore_case));

    // train
    TrainOptions train;
    std::filesystem::path train_stopwords;
    std::uint64_t model_seed = 42;
    std::int64_t created_at = -1;
    auto& tc = train.config;
    auto* c_train = app.add_subcommand("train", "Fit vectorizer and model on the training split, then evaluate");
    c_train->add_option("--manifest,-m", train.manifest, "Dataset manifest")->required();
    std::string vectorizer = "tfidf", model = "svm", mnb_input = "tfidf";
    c_train->add_option("--vectorizer", vectorizer, "tfidf|word2vec")->check(CLI::IsMember(kVectorizers));
    c_train->add_option("--model", model, "svm|mnb|rf")->check(CLI::IsMember(kModels));
    c_train->add_option("--test-ratio", tc.test_ratio, "Held-out fraction")->check(CLI::Range(0.0, 1.0));
    c_train->add_option("--split-seed", tc.split_seed, "Shuffle seed for the split");
    c_train->add_option("--model-seed", model_seed, "Seed for SVM, forest and word2vec");
    c_train->add_option("--fields", train.fields, "Text fields: combined|body")
        ->transform(CLI::CheckedTransformer(kFields, CLI::ignore_case));
    c_train->add_flag("--l2-normalize", tc.l2_normalize, "L2-normalize TF-IDF rows");
    c_train->add_option("--svm-c", tc.svm.C, "SVM regularization C");
    c_train->add_option("--svm-epochs", tc.svm.epochs, "SVM epochs");
    c_train->add_option("--mnb-alpha", tc.mnb_alpha, "Naive Bayes additive smoothing");
    c_train->add_option("--mnb-input", mnb_input, "Naive Bayes input with tf-idf: tfidf|counts")
        ->check(CLI::IsMember(kMnbInputs));
    c_train->add_option("--rf-trees", tc.rf.n_trees, "Number of trees");
    c_train->add_option("--rf-max-features", tc.rf.max_features, "Candidate features per node (0 = sqrt(dim))");
    c_train->add_option("--rf-vocab-cap", tc.rf_vocab_cap, "Keep the N most frequent TF-IDF terms for rf (0 = all)");
    c_train->add_option("--rf-max-depth", tc.rf.max_depth, "Tree depth limit (0 = unlimited)");
    c_train->add_option("--threads", tc.rf.threads, "Forest build threads (0 = all cores)");
    c_train->add_option("--w2v-dim", tc.word2vec.dim, "Embedding width");
    c_train->add_option("--w2v-window", tc.word2vec.window, "Context window");
    c_train->add_option("--w2v-epochs", tc.word2vec.epochs, "Training epochs");
    c_train->add_option("--w2v-negative", tc.word2vec.negative, "Negative samples per pair");
    c_train->add_option("--w2v-min-count", tc.word2vec.min_count, "Minimum token count");
    c_train->add_option("--out,-o", train.out, "Artifact output path");
    c_train->add_option("--report-csv", train.report_csv, "Also write the report row as CSV here");
    c_train->add_option("--created-at", created_at, "Override the artifact timestamp (unix seconds)");
    add_prep_flags(*c_train, train_stopwords);

    // evaluate
    EvaluateOptions evaluate;
    auto* c_eval = app.add_subcommand("evaluate", "Re-score an artifact on a manifest's held-out split");
    c_eval->add_option("--artifact,-a", evaluate.artifact, "Trained artifact")->required();
    c_eval->add_option("--manifest,-m", evaluate.manifest, "Dataset manifest")->required();
    c_eval->add_option("--test-ratio", evaluate.test_ratio, "Held-out fraction (default: artifact's)");
    c_eval->add_option("--split-seed", evaluate.seed, "Split seed (default: artifact's)");
    c_eval->add_option("--fields", evaluate.fields, "Text fields: combined|body")
        ->transform(CLI::CheckedTransformer(kFields, CLI::ignore_case));
    c_eval->add_option("--report-csv", evaluate.report_csv, "Also write the report row as CSV here");

    // predict
    PredictOptions predict;
    auto* c_predict = app.add_subcommand("predict", "Classify one email");
    c_predict->add_option("--artifact,-a", predict.artifact, "Trained artifact")->required();
    c_predict->add_option("--text,-t", predict.text, "Email text");
    c_predict->add_option("--file,-f", predict.file, "Read the email text from a file");
    c_predict->add_flag("--json", predict.json, "Print the /predict JSON body");

    // explain
    ExplainOptions explain;
    auto* c_explain = app.add_subcommand("explain", "Explain one prediction with token weights");
    c_explain->add_option("--artifact,-a", explain.artifact, "Trained artifact")->required();
    c_explain->add_option("--text,-t", explain.text, "Email text");
    c_explain->add_option("--file,-f", explain.file, "Read the email text from a file");
    c_explain->add_option("--samples", explain.config.n_samples, "Perturbation samples");
    c_explain->add_option("--top-k", explain.config.top_k, "Tokens to report");
    c_explain->add_option("--kernel-width", explain.config.kernel_width, "Proximity kernel width");
    c_explain->add_option("--seed", explain.config.seed, "Sampling seed");
    c_explain->add_flag("--json", explain.json, "Print the /explain JSON body");

    // serve
    ServeOptions serve;
    auto* c_serve = app.add_subcommand("serve", "Serve /predict, /explain and /health over HTTP");
    c_serve->add_option("--artifact,-a", serve.artifact, "Trained artifact (default: $MAILSIFT_ARTIFACT)");
    c_serve->add_option("--addr", serve.address, "host:port (default: $MAILSIFT_ADDR or 127.0.0.1:8080)");
    c_serve->add_option("--cors-origin", serve.cors_origin, "Allowed cross-origin caller");
    c_serve->add_option("--static-dir", serve.static_dir, "Serve a UI bundle from this directory")
        ->check(CLI::ExistingDirectory);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (c_ingest->parsed()) return cmd_ingest(ingest, out, err);
    if (c_train->parsed()) {
        tc.vectorizer = kVectorizers.at(vectorizer);
        tc.model = kModels.at(model);
        tc.mnb_input = kMnbInputs.at(mnb_input);
        tc.svm.seed = model_seed;
        tc.rf.seed = model_seed;
        tc.word2vec.seed = model_seed;
        if (created_at >= 0) train.created_at = created_at;
        if (!train_stopwords.empty()) {
            try {
                tc.prep.stopwords = load_stopwords(train_stopwords);
            } catch (const Error& e) {
                err << "error: " << e.what() << '\n';
                return kUsage;
            }
        }
        return cmd_train(train, out, err);
    }
    if (c_eval->parsed()) return cmd_evaluate(evaluate, out, err);
    if (c_predict->parsed()) return cmd_predict(predict, out, err);
    if (c_explain->parsed()) return cmd_explain(explain, out, err);
    if (c_serve->parsed()) return cmd_serve(serve, out, err);
    return kUsage;
}

}  // namespace mailsift::cli
