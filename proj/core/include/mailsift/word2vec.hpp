#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mailsift/textprep.hpp"

namespace mailsift {

struct Word2VecParams {
    std::size_t dim = 100;
    std::size_t window = 5;
    std::size_t epochs = 5;
    std::size_t negative = 5;
    std::size_t min_count = 2;
    std::uint64_t seed = 42;
    double learning_rate = 0.025;
    double min_learning_rate = 0.025 * 1e-4;
};

/// Input (word) vectors of a trained skip-gram model.
class EmbeddingTable {
public:
    EmbeddingTable() = default;
    EmbeddingTable(Word2VecParams params, std::vector<std::string> tokens, std::vector<float> vectors);

    std::size_t dim() const noexcept { return params_.dim; }
    std::size_t size() const noexcept { return tokens_.size(); }
    const Word2VecParams& params() const noexcept { return params_; }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }
    const std::vector<float>& data() const noexcept { return vectors_; }

    std::optional<std::size_t> index_of(const std::string& token) const;
    std::span<const float> vector(std::size_t index) const noexcept {
        return {vectors_.data() + index * params_.dim, params_.dim};
    }
    bool contains(const std::string& token) const { return index_of(token).has_value(); }

    friend bool operator==(const EmbeddingTable& a, const EmbeddingTable& b) {
        return a.tokens_ == b.tokens_ && a.vectors_ == b.vectors_;
    }

private:
    Word2VecParams params_;
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<float> vectors_;
};

/// Skip-gram with negative sampling, single-threaded and deterministic for a
/// given seed. Vocabulary is ordered by descending count, then first
/// appearance. Throws EmptyCorpus, NoTokensAboveMinCount or InvalidArgument.
EmbeddingTable train_word2vec(std::span<const TokenSequence> docs, const Word2VecParams& params);

/// Mean of the in-table token vectors; zero vector if none are in the table.
std::vector<double> embed_document(const EmbeddingTable& table, const TokenSequence& doc);

double cosine_similarity(std::span<const float> a, std::span<const float> b) noexcept;

namespace sgns {

double sigmoid(double x) noexcept;

/// d loss / d score for one (center, target) pair, where score = u . v and
/// label is 1 for the observed context word and 0 for a negative sample.
inline double score_gradient(double score, double label) noexcept { return sigmoid(score) - label; }

/// -log s(u_o . v_c) - sum_k log s(-u_k . v_c)
double loss(std::span<const double> center, std::span<const double> context,
            std::span<const std::vector<double>> negatives);

struct Gradient {
    std::vector<double> center;
    std::vector<double> context;
    std::vector<std::vector<double>> negatives;
};

Gradient gradient(std::span<const double> center, std::span<const double> context,
                  std::span<const std::vector<double>> negatives);

}  // namespace sgns

}  // namespace mailsift
