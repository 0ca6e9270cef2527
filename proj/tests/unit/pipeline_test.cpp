#include <gtest/gtest.h>

#include <mailsift/error.hpp>
#include <mailsift/training.hpp>

#include "test_support.hpp"

using namespace mailsift;
using mailsift::testing::fixture;

namespace {

const Corpus& fixture_corpus() {
    static const Corpus c = load_manifest(fixture("manifest.txt"));
    return c;
}

// tokens "s" and "h" with idf ln 2; anything containing "s" scores spam
Pipeline stub_pipeline() {
    Pipeline p;
    p.prep = PrepConfig{};
    p.vectorizer = TfIdfVectorizer{TfIdfModel::from_parts({"s", "h"}, {1, 1}, 2)};
    SvmModel m;
    m.weights = {10.0, -10.0};
    m.bias = -0.1;
    p.classifier = m;
    return p;
}

}  // namespace

class TrainCombos : public ::testing::TestWithParam<std::tuple<VectorizerKind, ModelKind>> {};

TEST_P(TrainCombos, FixtureSmoke) {
    TrainConfig cfg;
    cfg.vectorizer = std::get<0>(GetParam());
    cfg.model = std::get<1>(GetParam());
    cfg.rf.n_trees = 20;
    cfg.word2vec.dim = 16;
    const auto out = train_pipeline(fixture_corpus(), cfg);
    EXPECT_EQ(out.split.train.size(), 48u);
    EXPECT_EQ(out.split.test.size(), 12u);
    EXPECT_EQ(out.pipeline.model_kind(), cfg.model);
    EXPECT_EQ(out.pipeline.vectorizer_kind(), cfg.vectorizer);
    out.pipeline.validate();
    for (double v : {out.report.metrics.accuracy, out.report.metrics.precision, out.report.metrics.recall,
                     out.report.metrics.f1}) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
    }
    EXPECT_EQ(out.report.dataset, "30[1] 30[0]");
    EXPECT_EQ(out.report.model, to_string(cfg.model));
    EXPECT_EQ(out.pipeline.metadata.corpus_fingerprint, fixture_corpus().fingerprint());
    EXPECT_EQ(out.pipeline.metadata.metrics, out.report.metrics);
    EXPECT_EQ(evaluate_rows(out.pipeline, fixture_corpus(), out.split.test), out.report.metrics);
}

INSTANTIATE_TEST_SUITE_P(All, TrainCombos,
                         ::testing::Combine(::testing::Values(VectorizerKind::TfIdf, VectorizerKind::Word2Vec),
                                            ::testing::Values(ModelKind::Svm, ModelKind::Mnb, ModelKind::Rf)));

TEST(TrainPipeline, VectorizerSeesTrainingRowsOnly) {
    TrainConfig cfg;
    const auto out = train_pipeline(fixture_corpus(), cfg);
    const auto& tfidf = std::get<TfIdfVectorizer>(out.pipeline.vectorizer);
    EXPECT_EQ(tfidf.model.n_docs(), out.split.train.size());
    std::vector<TokenSequence> train_docs;
    for (auto i : out.split.train) train_docs.push_back(preprocess(fixture_corpus().records()[i].text_combined, cfg.prep));
    EXPECT_EQ(tfidf.model.tokens(), TfIdfModel::fit(train_docs).tokens());
}

TEST(TrainPipeline, Deterministic) {
    TrainConfig cfg;
    cfg.model = ModelKind::Rf;
    cfg.rf.n_trees = 10;
    const auto a = train_pipeline(fixture_corpus(), cfg);
    const auto b = train_pipeline(fixture_corpus(), cfg);
    EXPECT_EQ(a.report.metrics, b.report.metrics);
    EXPECT_EQ(a.split.test, b.split.test);
}

TEST(TrainPipeline, RfVocabCap) {
    TrainConfig cfg;
    cfg.model = ModelKind::Rf;
    cfg.rf.n_trees = 5;
    cfg.rf_vocab_cap = 50;
    const auto out = train_pipeline(fixture_corpus(), cfg);
    EXPECT_EQ(output_dim(out.pipeline.vectorizer), 50u);
}

TEST(Pipeline, StubModelKnownConfusion) {
    const auto p = stub_pipeline();
    // tp=2 fp=1 fn=1 tn=6
    const Corpus c({{"s", Label::Spam, ""},
                    {"s", Label::Spam, ""},
                    {"s", Label::Ham, ""},
                    {"h", Label::Spam, ""},
                    {"h", Label::Ham, ""},
                    {"h", Label::Ham, ""},
                    {"h", Label::Ham, ""},
                    {"h", Label::Ham, ""},
                    {"h", Label::Ham, ""},
                    {"h", Label::Ham, ""}});
    std::vector<std::size_t> all(10);
    for (std::size_t i = 0; i < 10; ++i) all[i] = i;
    const auto m = evaluate_rows(p, c, all);
    EXPECT_DOUBLE_EQ(m.accuracy, 0.8);
    EXPECT_DOUBLE_EQ(m.precision, 2.0 / 3.0);
}

TEST(Pipeline, ValidateCatchesWidthMismatch) {
    auto p = stub_pipeline();
    std::get<SvmModel>(p.classifier).weights.push_back(0.0);
    try {
        p.validate();
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ModelVectorizerMismatch);
    }
}

TEST(Pipeline, NaiveBayesInputsAreClipped) {
    Pipeline p;
    p.prep = PrepConfig{};
    Word2VecParams wp;
    wp.dim = 2;
    p.vectorizer = Word2VecVectorizer{EmbeddingTable(wp, {"a"}, {-1.0f, 2.0f})};
    MnbModel m;
    m.n_features = 2;
    m.log_prior = {std::log(0.5), std::log(0.5)};
    m.log_likelihood = {std::vector<double>{std::log(0.5), std::log(0.5)},
                        std::vector<double>{std::log(0.9), std::log(0.1)}};
    p.classifier = m;
    const auto x = p.features({"a"});
    EXPECT_EQ(x.at(0), 0.0);
    EXPECT_EQ(x.at(1), 2.0);
    EXPECT_EQ(p.predict("a").label, Label::Ham);
}

TEST(Pipeline, MnbCountsInput) {
    TrainConfig cfg;
    cfg.model = ModelKind::Mnb;
    cfg.mnb_input = FeatureInput::Counts;
    const auto out = train_pipeline(fixture_corpus(), cfg);
    const auto x = out.pipeline.features({"meeting", "meeting"});
    const auto i = std::get<TfIdfVectorizer>(out.pipeline.vectorizer).model.index_of("meeting");
    ASSERT_TRUE(i.has_value());
    EXPECT_EQ(x.at(static_cast<SparseVector::Index>(*i)), 2.0);
}
