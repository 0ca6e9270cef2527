#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "mailsift/eval.hpp"
#include "mailsift/pipeline.hpp"

namespace mailsift {

struct TrainConfig {
    VectorizerKind vectorizer = VectorizerKind::TfIdf;
    ModelKind model = ModelKind::Svm;
    double test_ratio = 0.2;
    std::uint64_t split_seed = 42;
    PrepConfig prep = PrepConfig::english();

    FeatureInput mnb_input = FeatureInput::TfIdf;
    bool l2_normalize = false;
    std::size_t rf_vocab_cap = 20000;  // 0 disables; applies to TF-IDF + RF only

    SvmParams svm;
    double mnb_alpha = 1.0;
    RfParams rf;
    Word2VecParams word2vec;
};

struct TrainOutcome {
    Pipeline pipeline;
    SplitIndices split;
    ReportRow report;
};

using ProgressFn = std::function<void(const std::string&)>;

/// Split, fit the vectorizer on the training rows only, train the model and
/// score it on the held-out rows.
TrainOutcome train_pipeline(const Corpus& corpus, const TrainConfig& config,
                            const ProgressFn& progress = {});

/// Metrics of `pipeline` over the given corpus rows.
Metrics evaluate_rows(const Pipeline& pipeline, const Corpus& corpus, std::span<const std::size_t> rows);

ReportRow make_report_row(const Pipeline& pipeline, const Metrics& metrics);

}  // namespace mailsift
