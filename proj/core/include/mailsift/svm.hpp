#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mailsift/corpus.hpp"
#include "mailsift/prediction.hpp"
#include "mailsift/sparse.hpp"

namespace mailsift {

struct SvmParams {
    double C = 1.0;
    std::size_t epochs = 20;
    std::uint64_t seed = 42;
};

/// Linear SVM, f(x) = w . x + b.
struct SvmModel {
    std::vector<double> weights;
    double bias = 0.0;
    SvmParams params;

    std::size_t dim() const noexcept { return weights.size(); }
    double margin(const SparseVector& x) const;
    /// score = sigmoid(margin). This is an uncalibrated squashing of the
    /// margin, not a fitted probability.
    Prediction predict(const SparseVector& x) const;
};

struct SvmTrace {
    /// Primal objective of the returned (averaged) iterate after each epoch.
    std::vector<double> objective;
};

/// Primal objective lambda/2 ||(w, b)||^2 + mean hinge, lambda = 1/(C n).
double svm_objective(const SvmModel& model, std::span<const SparseVector> xs,
                     std::span<const Label> ys);

/// Pegasos subgradient descent over the L2-regularized hinge loss, with the
/// bias folded in as a regularized constant feature. Each epoch visits a
/// seeded shuffle of the data; the returned weights are the average of the
/// end-of-epoch iterates. Throws SingleClassData, DimensionMismatch,
/// InvalidArgument.
SvmModel train_svm(std::span<const SparseVector> xs, std::span<const Label> ys,
                   const SvmParams& params = {}, SvmTrace* trace = nullptr);

}  // namespace mailsift
