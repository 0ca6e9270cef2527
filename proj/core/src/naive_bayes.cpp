#include "mailsift/naive_bayes.hpp"

#include <cmath>

#include "mailsift/error.hpp"

namespace mailsift {

double MnbModel::joint_log_score(const SparseVector& x, Label label) const {
    if (x.dim() != n_features) {
        throw Error(ErrorKind::DimensionMismatch,
                    "mnb expects " + std::to_string(n_features) + " features, got " + std::to_string(x.dim()));
    }
    const auto c = static_cast<std::size_t>(label);
    return log_prior[c] + x.dot(log_likelihood[c]);
}

Prediction MnbModel::predict(const SparseVector& x) const {
    const double margin = joint_log_score(x, Label::Spam) - joint_log_score(x, Label::Ham);
    // exp(s) / (exp(s) + exp(h)) == 1 / (1 + exp(h - s))
    return make_prediction(1.0 / (1.0 + std::exp(-margin)), margin);
}

MnbModel train_mnb(std::span<const SparseVector> xs, std::span<const Label> ys, double alpha) {
    if (xs.size() != ys.size()) throw Error(ErrorKind::DimensionMismatch, "feature rows and labels differ in count");
    if (xs.empty()) throw Error(ErrorKind::InvalidArgument, "no training rows");
    if (!(alpha > 0.0)) throw Error(ErrorKind::InvalidArgument, "alpha must be > 0");

    const std::size_t dim = xs.front().dim();
    MnbModel m;
    m.alpha = alpha;
    m.n_features = dim;

    std::array<std::vector<double>, 2> counts{std::vector<double>(dim, 0.0), std::vector<double>(dim, 0.0)};
    std::array<std::size_t, 2> docs{0, 0};
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].dim() != dim) throw Error(ErrorKind::DimensionMismatch, "feature rows differ in width");
        const auto c = static_cast<std::size_t>(ys[i]);
        ++docs[c];
        auto idx = xs[i].indices();
        auto val = xs[i].values();
        for (std::size_t k = 0; k < idx.size(); ++k) {
            if (val[k] < 0.0) throw Error(ErrorKind::NegativeFeature, "row " + std::to_string(i));
            counts[c][idx[k]] += val[k];
        }
    }
    if (docs[0] == 0 || docs[1] == 0) throw Error(ErrorKind::SingleClassData, "training labels contain a single class");

    const double n = static_cast<double>(xs.size());
    for (std::size_t c = 0; c < 2; ++c) {
        m.log_prior[c] = std::log(static_cast<double>(docs[c]) / n);
        double total = 0.0;
        for (double v : counts[c]) total += v;
        const double denom = std::log(total + alpha * static_cast<double>(dim));
        m.log_likelihood[c].resize(dim);
        for (std::size_t w = 0; w < dim; ++w) m.log_likelihood[c][w] = std::log(counts[c][w] + alpha) - denom;
    }
    return m;
}

}  // namespace mailsift
