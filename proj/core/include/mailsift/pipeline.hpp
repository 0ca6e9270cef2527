#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "mailsift/classifier.hpp"
#include "mailsift/eval.hpp"
#include "mailsift/textprep.hpp"
#include "mailsift/tfidf.hpp"
#include "mailsift/word2vec.hpp"

namespace mailsift {

enum class VectorizerKind { TfIdf, Word2Vec };

std::string_view to_string(VectorizerKind kind) noexcept;
std::optional<VectorizerKind> parse_vectorizer_kind(std::string_view tag) noexcept;

/// What a TF-IDF vectorizer hands to the classifier.
enum class FeatureInput { TfIdf, Counts };

std::string_view to_string(FeatureInput input) noexcept;
std::optional<FeatureInput> parse_feature_input(std::string_view tag) noexcept;

struct TfIdfVectorizer {
    TfIdfModel model;
    FeatureInput input = FeatureInput::TfIdf;
    bool l2_normalize = false;
};

struct Word2VecVectorizer {
    EmbeddingTable table;
};

using Vectorizer = std::variant<TfIdfVectorizer, Word2VecVectorizer>;

VectorizerKind kind_of(const Vectorizer& vectorizer) noexcept;
std::size_t output_dim(const Vectorizer& vectorizer) noexcept;
SparseVector vectorize(const Vectorizer& vectorizer, const TokenSequence& doc);

struct TrainingMetadata {
    std::string corpus_fingerprint;
    std::string dataset;  // e.g. "42891[1] 39595[0]"
    std::uint64_t split_seed = 42;
    double test_ratio = 0.2;
    std::uint64_t n_train = 0;
    std::uint64_t n_test = 0;
    Metrics metrics;
    std::int64_t created_at = 0;  // unix seconds
};

/// Preprocessing, vectorizer and classifier trained against each other.
struct Pipeline {
    PrepConfig prep;
    Vectorizer vectorizer;
    ClassifierModel classifier;
    TrainingMetadata metadata;

    /// Throws ModelVectorizerMismatch when the feature widths disagree.
    void validate() const;

    TokenSequence tokenize(std::string_view text) const { return preprocess(text, prep); }
    /// Vectorizes and, for Naive Bayes, clips negative values to zero.
    SparseVector features(const TokenSequence& tokens) const;
    Prediction predict_tokens(const TokenSequence& tokens) const;
    Prediction predict(std::string_view text) const { return predict_tokens(tokenize(text)); }

    ModelKind model_kind() const noexcept { return kind_of(classifier); }
    VectorizerKind vectorizer_kind() const noexcept { return kind_of(vectorizer); }
};

}  // namespace mailsift
