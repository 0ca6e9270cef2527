#include "mailsift/word2vec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mailsift/error.hpp"
#include "mailsift/random.hpp"

namespace mailsift {

EmbeddingTable::EmbeddingTable(Word2VecParams params, std::vector<std::string> tokens, std::vector<float> vectors)
    : params_(params), tokens_(std::move(tokens)), vectors_(std::move(vectors)) {
    if (params_.dim == 0 || vectors_.size() != tokens_.size() * params_.dim) {
        throw Error(ErrorKind::InvalidArgument, "embedding table shape mismatch");
    }
    index_.reserve(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) index_.emplace(tokens_[i], i);
    if (index_.size() != tokens_.size()) throw Error(ErrorKind::InvalidArgument, "duplicate embedding token");
}

std::optional<std::size_t> EmbeddingTable::index_of(const std::string& token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace sgns {

double sigmoid(double x) noexcept {
    if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

namespace {
double dot(std::span<const double> a, std::span<const double> b) noexcept {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}
// -log sigmoid(x), stable for large |x|
double neg_log_sigmoid(double x) noexcept {
    return x >= 0 ? std::log1p(std::exp(-x)) : -x + std::log1p(std::exp(x));
}
}  // namespace

double loss(std::span<const double> center, std::span<const double> context,
            std::span<const std::vector<double>> negatives) {
    double l = neg_log_sigmoid(dot(context, center));
    for (const auto& u : negatives) l += neg_log_sigmoid(-dot(u, center));
    return l;
}

Gradient gradient(std::span<const double> center, std::span<const double> context,
                  std::span<const std::vector<double>> negatives) {
    const std::size_t dim = center.size();
    Gradient g;
    g.center.assign(dim, 0.0);
    auto add_target = [&](std::span<const double> u, double label) {
        const double coef = score_gradient(dot(u, center), label);
        std::vector<double> gu(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            g.center[i] += coef * u[i];
            gu[i] = coef * center[i];
        }
        return gu;
    };
    g.context = add_target(context, 1.0);
    for (const auto& u : negatives) g.negatives.push_back(add_target(u, 0.0));
    return g;
}

}  // namespace sgns

namespace {

struct Vocabulary {
    std::vector<std::string> tokens;
    std::vector<std::size_t> counts;
    std::unordered_map<std::string, std::uint32_t> index;
};

Vocabulary build_vocabulary(std::span<const TokenSequence> docs, std::size_t min_count) {
    std::unordered_map<std::string, std::size_t> slot;
    std::vector<std::string> seen;
    std::vector<std::size_t> counts;
    for (const auto& doc : docs) {
        for (const auto& tok : doc) {
            auto [it, inserted] = slot.try_emplace(tok, seen.size());
            if (inserted) {
                seen.push_back(tok);
                counts.push_back(0);
            }
            ++counts[it->second];
        }
    }
    if (seen.empty()) throw Error(ErrorKind::EmptyCorpus, "no tokens to train embeddings on");

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (counts[i] >= min_count) order.push_back(i);
    }
    if (order.empty()) {
        throw Error(ErrorKind::NoTokensAboveMinCount, "min_count " + std::to_string(min_count));
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });

    Vocabulary v;
    for (std::size_t i : order) {
        v.index.emplace(seen[i], static_cast<std::uint32_t>(v.tokens.size()));
        v.tokens.push_back(seen[i]);
        v.counts.push_back(counts[i]);
    }
    return v;
}

// unigram^0.75 lookup table for O(1) negative draws
class NegativeSampler {
public:
    explicit NegativeSampler(const std::vector<std::size_t>& counts) {
        constexpr std::size_t kTableSize = std::size_t{1} << 22;
        double total = 0.0;
        for (auto c : counts) total += std::pow(static_cast<double>(c), 0.75);
        table_.reserve(kTableSize);
        double cum = 0.0;
        for (std::size_t i = 0; i < counts.size(); ++i) {
            cum += std::pow(static_cast<double>(counts[i]), 0.75) / total;
            const auto upto = std::min(kTableSize, static_cast<std::size_t>(std::llround(cum * kTableSize)));
            while (table_.size() < upto) table_.push_back(static_cast<std::uint32_t>(i));
        }
        while (table_.size() < kTableSize) table_.push_back(static_cast<std::uint32_t>(counts.size() - 1));
    }

    std::uint32_t draw(Rng& rng) const { return table_[rng.next() & (table_.size() - 1)]; }

private:
    std::vector<std::uint32_t> table_;
};

// 8 independent partial sums so the loop vectorizes without reassociation flags
float dot8(const float* a, const float* b, std::size_t n) noexcept {
    float acc[8] = {};
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        for (std::size_t k = 0; k < 8; ++k) acc[k] += a[i + k] * b[i + k];
    }
    float s = ((acc[0] + acc[1]) + (acc[2] + acc[3])) + ((acc[4] + acc[5]) + (acc[6] + acc[7]));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

EmbeddingTable train_word2vec(std::span<const TokenSequence> docs, const Word2VecParams& params) {
    if (params.dim == 0 || params.window == 0 || params.epochs == 0) {
        throw Error(ErrorKind::InvalidArgument, "dim, window and epochs must be >= 1");
    }
    if (params.learning_rate <= 0.0) throw Error(ErrorKind::InvalidArgument, "learning_rate must be > 0");

    const Vocabulary vocab = build_vocabulary(docs, std::max<std::size_t>(params.min_count, 1));
    const std::size_t dim = params.dim;
    const std::size_t vsize = vocab.tokens.size();

    Rng rng(params.seed);
    std::vector<float> input(vsize * dim);
    for (float& x : input) x = static_cast<float>((rng.uniform() - 0.5) / static_cast<double>(dim));
    std::vector<float> output(vsize * dim, 0.0f);
    const NegativeSampler sampler(vocab.counts);

    std::vector<std::vector<std::uint32_t>> encoded;
    encoded.reserve(docs.size());
    std::size_t words_per_epoch = 0;
    for (const auto& doc : docs) {
        std::vector<std::uint32_t> ids;
        for (const auto& tok : doc) {
            if (auto it = vocab.index.find(tok); it != vocab.index.end()) ids.push_back(it->second);
        }
        words_per_epoch += ids.size();
        encoded.push_back(std::move(ids));
    }
    const double total_words = static_cast<double>(words_per_epoch * params.epochs) + 1.0;

    std::vector<float> center_grad(dim);
    std::size_t processed = 0;
    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
        for (const auto& ids : encoded) {
            for (std::size_t i = 0; i < ids.size(); ++i, ++processed) {
                const double lr = std::max(params.min_learning_rate,
                                           params.learning_rate * (1.0 - static_cast<double>(processed) / total_words));
                // shrunk window in [1, window]
                const std::size_t span = params.window - rng.uniform_index(params.window);
                const std::size_t lo = i >= span ? i - span : 0;
                const std::size_t hi = std::min(ids.size() - 1, i + span);
                float* center = input.data() + static_cast<std::size_t>(ids[i]) * dim;

                for (std::size_t j = lo; j <= hi; ++j) {
                    if (j == i) continue;
                    std::fill(center_grad.begin(), center_grad.end(), 0.0f);
                    for (std::size_t k = 0; k <= params.negative; ++k) {
                        std::uint32_t target;
                        double label;
                        if (k == 0) {
                            target = ids[j];
                            label = 1.0;
                        } else {
                            target = sampler.draw(rng);
                            if (target == ids[j]) continue;
                            label = 0.0;
                        }
                        float* u = output.data() + static_cast<std::size_t>(target) * dim;
                        const double score = dot8(u, center, dim);
                        const auto step = static_cast<float>(-lr * sgns::score_gradient(score, label));
                        for (std::size_t d = 0; d < dim; ++d) {
                            center_grad[d] += step * u[d];
                            u[d] += step * center[d];
                        }
                    }
                    for (std::size_t d = 0; d < dim; ++d) center[d] += center_grad[d];
                }
            }
        }
    }
    return EmbeddingTable(params, vocab.tokens, std::move(input));
}

std::vector<double> embed_document(const EmbeddingTable& table, const TokenSequence& doc) {
    std::vector<double> mean(table.dim(), 0.0);
    std::size_t hits = 0;
    for (const auto& tok : doc) {
        if (auto idx = table.index_of(tok)) {
            const auto v = table.vector(*idx);
            for (std::size_t d = 0; d < mean.size(); ++d) mean[d] += v[d];
            ++hits;
        }
    }
    if (hits > 0) {
        for (double& x : mean) x /= static_cast<double>(hits);
    }
    return mean;
}

double cosine_similarity(std::span<const float> a, std::span<const float> b) noexcept {
    double ab = 0.0;
    double aa = 0.0;
    double bb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ab += static_cast<double>(a[i]) * b[i];
        aa += static_cast<double>(a[i]) * a[i];
        bb += static_cast<double>(b[i]) * b[i];
    }
    if (aa == 0.0 || bb == 0.0) return 0.0;
    return ab / std::sqrt(aa * bb);
}

}  // namespace mailsift
