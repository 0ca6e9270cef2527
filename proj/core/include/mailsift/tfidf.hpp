#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mailsift/sparse.hpp"
#include "mailsift/textprep.hpp"

namespace mailsift {

/// Vocabulary plus document statistics. Column order is first appearance in
/// the fitting corpus; idf(w) = ln(n_docs / df(w)) with no smoothing.
class TfIdfModel {
public:
    TfIdfModel() = default;

    /// Throws EmptyCorpus if no document has a token.
    static TfIdfModel fit(std::span<const TokenSequence> docs);

    /// Rebuilds a model from stored statistics (artifact loading).
    static TfIdfModel from_parts(std::vector<std::string> tokens, std::vector<std::size_t> doc_freq,
                                 std::size_t n_docs);

    /// Keeps the `max_features` tokens with the highest document frequency
    /// (ties broken by column order); kept tokens retain their relative order.
    TfIdfModel restrict_top_by_df(std::size_t max_features) const;

    std::size_t dim() const noexcept { return tokens_.size(); }
    std::size_t n_docs() const noexcept { return n_docs_; }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }
    const std::vector<std::size_t>& doc_freq() const noexcept { return doc_freq_; }
    const std::vector<double>& idf() const noexcept { return idf_; }
    std::optional<std::size_t> index_of(const std::string& token) const;

    /// value(w) = count(w, d) / len(d) * idf(w); OOV tokens are ignored but
    /// still count toward len(d). Empty documents give the zero vector.
    SparseVector transform(const TokenSequence& doc, bool l2_normalize = false) const;

    /// Raw in-vocabulary token counts.
    SparseVector counts(const TokenSequence& doc) const;

private:
    void rebuild_index();

    std::vector<std::string> tokens_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> doc_freq_;
    std::vector<double> idf_;
    std::size_t n_docs_ = 0;
};

}  // namespace mailsift
