#pragma once

#include <array>
#include <span>
#include <vector>

#include "mailsift/corpus.hpp"
#include "mailsift/prediction.hpp"
#include "mailsift/sparse.hpp"

namespace mailsift {

/// Multinomial Naive Bayes over non-negative (count-like) features.
struct MnbModel {
    double alpha = 1.0;
    std::size_t n_features = 0;
    std::array<double, 2> log_prior{};               // indexed by Label
    std::array<std::vector<double>, 2> log_likelihood;  // [label][feature]

    /// Joint log score ln P(c) + sum_w x_w ln P(w | c).
    double joint_log_score(const SparseVector& x, Label label) const;
    /// score = normalized spam posterior, margin = spam - ham log score.
    Prediction predict(const SparseVector& x) const;
};

/// log_likelihood[c][w] = ln((count(w,c) + alpha) / (total(c) + alpha * V)).
/// Throws NegativeFeature, SingleClassData, DimensionMismatch, InvalidArgument.
MnbModel train_mnb(std::span<const SparseVector> xs, std::span<const Label> ys, double alpha = 1.0);

}  // namespace mailsift
