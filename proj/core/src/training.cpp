#include "mailsift/training.hpp"

#include <chrono>

#include "mailsift/error.hpp"

namespace mailsift {

namespace {

void say(const ProgressFn& progress, const std::string& msg) {
    if (progress) progress(msg);
}

}  // namespace

ReportRow make_report_row(const Pipeline& pipeline, const Metrics& metrics) {
    return {pipeline.metadata.dataset, std::string(to_string(pipeline.vectorizer_kind())),
            std::string(to_string(pipeline.model_kind())), metrics};
}

Metrics evaluate_rows(const Pipeline& pipeline, const Corpus& corpus, std::span<const std::size_t> rows) {
    std::vector<Label> predicted;
    std::vector<Label> truth;
    predicted.reserve(rows.size());
    truth.reserve(rows.size());
    for (std::size_t r : rows) {
        const auto& rec = corpus.records().at(r);
        predicted.push_back(pipeline.predict(rec.text_combined).label);
        truth.push_back(rec.label);
    }
    return metrics(confusion(predicted, truth));
}

TrainOutcome train_pipeline(const Corpus& corpus, const TrainConfig& config, const ProgressFn& progress) {
    TrainOutcome out;
    out.split = split(corpus, config.test_ratio, config.split_seed);
    say(progress, "split " + std::to_string(out.split.train.size()) + " train / " +
                      std::to_string(out.split.test.size()) + " test");

    Pipeline& p = out.pipeline;
    p.prep = config.prep;

    std::vector<TokenSequence> train_tokens;
    std::vector<Label> train_labels;
    train_tokens.reserve(out.split.train.size());
    for (std::size_t r : out.split.train) {
        const auto& rec = corpus.records()[r];
        train_tokens.push_back(p.tokenize(rec.text_combined));
        train_labels.push_back(rec.label);
    }

    if (config.vectorizer == VectorizerKind::TfIdf) {
        TfIdfVectorizer v;
        v.model = TfIdfModel::fit(train_tokens);
        if (config.model == ModelKind::Rf && config.rf_vocab_cap > 0) {
            v.model = v.model.restrict_top_by_df(config.rf_vocab_cap);
        }
        v.l2_normalize = config.l2_normalize;
        if (config.model == ModelKind::Mnb) v.input = config.mnb_input;
        say(progress, "tf-idf vocabulary " + std::to_string(v.model.dim()));
        p.vectorizer = std::move(v);
    } else {
        Word2VecVectorizer v{train_word2vec(train_tokens, config.word2vec)};
        say(progress, "word2vec vocabulary " + std::to_string(v.table.size()));
        p.vectorizer = std::move(v);
    }

    // Placeholder classifier so features() knows whether to clip for MNB.
    if (config.model == ModelKind::Mnb) p.classifier = MnbModel{};
    std::vector<SparseVector> xs;
    xs.reserve(train_tokens.size());
    for (const auto& toks : train_tokens) xs.push_back(p.features(toks));

    say(progress, "training " + std::string(to_string(config.model)));
    switch (config.model) {
        case ModelKind::Svm: p.classifier = train_svm(xs, train_labels, config.svm); break;
        case ModelKind::Mnb: p.classifier = train_mnb(xs, train_labels, config.mnb_alpha); break;
        case ModelKind::Rf: p.classifier = train_rf(xs, train_labels, config.rf); break;
    }
    p.validate();

    const Metrics m = evaluate_rows(p, corpus, out.split.test);
    auto& meta = p.metadata;
    meta.corpus_fingerprint = corpus.fingerprint();
    meta.dataset = dataset_label(corpus.class_counts());
    meta.split_seed = config.split_seed;
    meta.test_ratio = config.test_ratio;
    meta.n_train = out.split.train.size();
    meta.n_test = out.split.test.size();
    meta.metrics = m;
    meta.created_at = std::chrono::duration_cast<std::chrono::seconds>(
                          std::chrono::system_clock::now().time_since_epoch())
                          .count();
    out.report = make_report_row(p, m);
    return out;
}

}  // namespace mailsift
