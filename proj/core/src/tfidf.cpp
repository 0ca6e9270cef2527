#include "mailsift/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mailsift/error.hpp"

namespace mailsift {

TfIdfModel TfIdfModel::fit(std::span<const TokenSequence> docs) {
    TfIdfModel m;
    std::vector<std::size_t> last_doc;  // last document that counted each token
    for (std::size_t d = 0; d < docs.size(); ++d) {
        for (const auto& tok : docs[d]) {
            auto [it, inserted] = m.index_.try_emplace(tok, m.tokens_.size());
            if (inserted) {
                m.tokens_.push_back(tok);
                m.doc_freq_.push_back(0);
                last_doc.push_back(d + 1);
                m.doc_freq_.back() = 1;
            } else if (last_doc[it->second] != d + 1) {
                last_doc[it->second] = d + 1;
                ++m.doc_freq_[it->second];
            }
        }
    }
    if (m.tokens_.empty()) throw Error(ErrorKind::EmptyCorpus, "no tokens in any document");
    m.n_docs_ = docs.size();
    m.idf_.resize(m.tokens_.size());
    for (std::size_t i = 0; i < m.tokens_.size(); ++i) {
        m.idf_[i] = std::log(static_cast<double>(m.n_docs_) / static_cast<double>(m.doc_freq_[i]));
    }
    return m;
}

TfIdfModel TfIdfModel::from_parts(std::vector<std::string> tokens, std::vector<std::size_t> doc_freq,
                                  std::size_t n_docs) {
    if (tokens.size() != doc_freq.size()) {
        throw Error(ErrorKind::InvalidArgument, "token and document-frequency lists differ in length");
    }
    TfIdfModel m;
    m.tokens_ = std::move(tokens);
    m.doc_freq_ = std::move(doc_freq);
    m.n_docs_ = n_docs;
    m.idf_.resize(m.tokens_.size());
    for (std::size_t i = 0; i < m.tokens_.size(); ++i) {
        if (m.doc_freq_[i] == 0 || m.doc_freq_[i] > n_docs) {
            throw Error(ErrorKind::InvalidArgument, "document frequency out of range for " + m.tokens_[i]);
        }
        m.idf_[i] = std::log(static_cast<double>(n_docs) / static_cast<double>(m.doc_freq_[i]));
    }
    m.rebuild_index();
    if (m.index_.size() != m.tokens_.size()) throw Error(ErrorKind::InvalidArgument, "duplicate vocabulary token");
    return m;
}

void TfIdfModel::rebuild_index() {
    index_.clear();
    index_.reserve(tokens_.size());
    for (std::size_t i = 0; i < tokens_.size(); ++i) index_.emplace(tokens_[i], i);
}

TfIdfModel TfIdfModel::restrict_top_by_df(std::size_t max_features) const {
    if (max_features >= tokens_.size()) return *this;
    std::vector<std::size_t> order(tokens_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return doc_freq_[a] > doc_freq_[b]; });
    order.resize(max_features);
    std::sort(order.begin(), order.end());

    TfIdfModel m;
    m.n_docs_ = n_docs_;
    for (std::size_t i : order) {
        m.tokens_.push_back(tokens_[i]);
        m.doc_freq_.push_back(doc_freq_[i]);
        m.idf_.push_back(idf_[i]);
    }
    m.rebuild_index();
    return m;
}

std::optional<std::size_t> TfIdfModel::index_of(const std::string& token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SparseVector TfIdfModel::counts(const TokenSequence& doc) const {
    std::vector<std::pair<SparseVector::Index, double>> entries;
    entries.reserve(doc.size());
    for (const auto& tok : doc) {
        if (auto it = index_.find(tok); it != index_.end()) {
            entries.emplace_back(static_cast<SparseVector::Index>(it->second), 1.0);
        }
    }
    return SparseVector::from_entries(dim(), std::move(entries));
}

SparseVector TfIdfModel::transform(const TokenSequence& doc, bool l2_normalize) const {
    if (doc.empty()) return SparseVector(dim());
    const double len = static_cast<double>(doc.size());
    const SparseVector tf = counts(doc);
    std::vector<std::pair<SparseVector::Index, double>> entries;
    entries.reserve(tf.nnz());
    for (std::size_t i = 0; i < tf.nnz(); ++i) {
        const auto col = tf.indices()[i];
        entries.emplace_back(col, tf.values()[i] / len * idf_[col]);
    }
    SparseVector v = SparseVector::from_entries(dim(), std::move(entries));
    if (l2_normalize) {
        const double norm = std::sqrt(v.squared_norm());
        if (norm > 0.0) v.transform_values([norm](double x) { return x / norm; });
    }
    return v;
}

}  // namespace mailsift
