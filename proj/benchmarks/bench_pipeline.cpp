#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>

#include <mailsift/explain.hpp>
#include <mailsift/random.hpp>
#include <mailsift/training.hpp>

using namespace mailsift;

namespace {

// Random mail-like text drawn from a Zipf-ish vocabulary.
std::string fake_email(Rng& rng, std::size_t words) {
    std::string out;
    for (std::size_t i = 0; i < words; ++i) {
        const double u = rng.uniform();
        const auto w = static_cast<std::uint64_t>(std::pow(5000.0, u * u));
        out += "w" + std::to_string(w);
        out += (i % 11 == 10) ? ". " : " ";
    }
    return out;
}

std::vector<TokenSequence> fake_docs(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<TokenSequence> docs;
    const PrepConfig cfg;
    for (std::size_t i = 0; i < n; ++i) docs.push_back(preprocess(fake_email(rng, 40 + rng.uniform_index(160)), cfg));
    return docs;
}

struct Features {
    std::vector<SparseVector> xs;
    std::vector<Label> ys;
};

Features fake_features(std::size_t n) {
    const auto docs = fake_docs(n, 1);
    const auto m = TfIdfModel::fit(docs);
    Features f;
    Rng rng(2);
    for (const auto& d : docs) {
        f.xs.push_back(m.transform(d));
        // label leans on a handful of tokens
        const bool spam = std::find(d.begin(), d.end(), "w3") != d.end() || rng.uniform() < 0.1;
        f.ys.push_back(spam ? Label::Spam : Label::Ham);
    }
    return f;
}

void BM_Preprocess(benchmark::State& state) {
    Rng rng(3);
    const auto text = fake_email(rng, static_cast<std::size_t>(state.range(0)));
    const auto cfg = PrepConfig::english();
    for (auto _ : state) benchmark::DoNotOptimize(preprocess(text, cfg));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_Preprocess)->Arg(100)->Arg(1000);

void BM_TfIdfFit(benchmark::State& state) {
    const auto docs = fake_docs(static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) benchmark::DoNotOptimize(TfIdfModel::fit(docs));
}
BENCHMARK(BM_TfIdfFit)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_TfIdfTransform(benchmark::State& state) {
    const auto docs = fake_docs(2000, 5);
    const auto m = TfIdfModel::fit(docs);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(m.transform(docs[i++ % docs.size()]));
}
BENCHMARK(BM_TfIdfTransform);

void BM_SvmTrain(benchmark::State& state) {
    const auto f = fake_features(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(train_svm(f.xs, f.ys));
}
BENCHMARK(BM_SvmTrain)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_MnbTrain(benchmark::State& state) {
    const auto f = fake_features(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(train_mnb(f.xs, f.ys));
}
BENCHMARK(BM_MnbTrain)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_RfTrain(benchmark::State& state) {
    const auto f = fake_features(static_cast<std::size_t>(state.range(0)));
    RfParams p;
    p.n_trees = 10;
    for (auto _ : state) benchmark::DoNotOptimize(train_rf(f.xs, f.ys, p));
}
BENCHMARK(BM_RfTrain)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_RfPredict(benchmark::State& state) {
    const auto f = fake_features(2000);
    const auto m = train_rf(f.xs, f.ys);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(m.predict(f.xs[i++ % f.xs.size()]));
}
BENCHMARK(BM_RfPredict);

void BM_Word2VecEpoch(benchmark::State& state) {
    const auto docs = fake_docs(static_cast<std::size_t>(state.range(0)), 6);
    Word2VecParams p;
    p.epochs = 1;
    for (auto _ : state) benchmark::DoNotOptimize(train_word2vec(docs, p));
}
BENCHMARK(BM_Word2VecEpoch)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Explain(benchmark::State& state) {
    Rng rng(7);
    const auto doc = preprocess(fake_email(rng, 120), PrepConfig{});
    const auto f = fake_features(1000);
    const auto docs = fake_docs(1000, 1);
    const auto m = TfIdfModel::fit(docs);
    const auto svm = train_svm(f.xs, f.ys);
    const TokenScorer scorer = [&](const TokenSequence& d) { return svm.predict(m.transform(d)).score; };
    ExplainConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(explain_tokens(doc, scorer, cfg));
}
BENCHMARK(BM_Explain)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
