#include "mailsift/pipeline.hpp"

#include "mailsift/error.hpp"
#include "strings.hpp"

namespace mailsift {

std::string_view to_string(VectorizerKind kind) noexcept {
    return kind == VectorizerKind::TfIdf ? "tfidf" : "word2vec";
}

std::optional<VectorizerKind> parse_vectorizer_kind(std::string_view tag) noexcept {
    const auto t = detail::to_lower(detail::trim(tag));
    if (t == "tfidf" || t == "tf-idf") return VectorizerKind::TfIdf;
    if (t == "word2vec" || t == "w2v") return VectorizerKind::Word2Vec;
    return std::nullopt;
}

std::string_view to_string(FeatureInput input) noexcept { return input == FeatureInput::TfIdf ? "tfidf" : "counts"; }

std::optional<FeatureInput> parse_feature_input(std::string_view tag) noexcept {
    const auto t = detail::to_lower(detail::trim(tag));
    if (t == "tfidf" || t == "tf-idf") return FeatureInput::TfIdf;
    if (t == "counts") return FeatureInput::Counts;
    return std::nullopt;
}

VectorizerKind kind_of(const Vectorizer& vectorizer) noexcept { return static_cast<VectorizerKind>(vectorizer.index()); }

std::size_t output_dim(const Vectorizer& vectorizer) noexcept {
    if (const auto* t = std::get_if<TfIdfVectorizer>(&vectorizer)) return t->model.dim();
    return std::get<Word2VecVectorizer>(vectorizer).table.dim();
}

SparseVector vectorize(const Vectorizer& vectorizer, const TokenSequence& doc) {
    if (const auto* t = std::get_if<TfIdfVectorizer>(&vectorizer)) {
        if (t->input == FeatureInput::Counts) return t->model.counts(doc);
        return t->model.transform(doc, t->l2_normalize);
    }
    const auto& table = std::get<Word2VecVectorizer>(vectorizer).table;
    const auto dense = embed_document(table, doc);
    return SparseVector::from_dense(dense);
}

void Pipeline::validate() const {
    const std::size_t vdim = output_dim(vectorizer);
    const std::size_t mdim = feature_dim(classifier);
    if (vdim != mdim) {
        throw Error(ErrorKind::ModelVectorizerMismatch, "vectorizer emits " + std::to_string(vdim) +
                                                            " features but the classifier expects " +
                                                            std::to_string(mdim));
    }
}

SparseVector Pipeline::features(const TokenSequence& tokens) const {
    SparseVector x = vectorize(vectorizer, tokens);
    if (model_kind() == ModelKind::Mnb) x.transform_values([](double v) { return v > 0.0 ? v : 0.0; });
    return x;
}

Prediction Pipeline::predict_tokens(const TokenSequence& tokens) const {
    return mailsift::predict(classifier, features(tokens));
}

}  // namespace mailsift
