#include "mailsift/explain.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "mailsift/error.hpp"
#include "mailsift/random.hpp"

namespace mailsift {

void ExplainConfig::validate() const {
    if (n_samples == 0) throw Error(ErrorKind::InvalidArgument, "n_samples must be >= 1");
    if (top_k == 0) throw Error(ErrorKind::InvalidArgument, "top_k must be >= 1");
    if (!(kernel_width > 0.0)) throw Error(ErrorKind::InvalidArgument, "kernel_width must be > 0");
    if (ridge < 0.0) throw Error(ErrorKind::InvalidArgument, "ridge must be >= 0");
}

std::vector<PerturbationSample> perturb_samples(const TokenSequence& doc, std::size_t n, std::uint64_t seed) {
    if (doc.empty()) throw Error(ErrorKind::EmptyDocument, "nothing to perturb");
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "need at least one sample");

    const std::size_t d = doc.size();
    std::vector<PerturbationSample> out;
    out.reserve(n);
    out.push_back({std::vector<std::uint8_t>(d, 1), doc});

    Rng rng(seed);
    std::vector<std::size_t> positions(d);
    for (std::size_t s = 1; s < n; ++s) {
        const std::size_t remove = 1 + static_cast<std::size_t>(rng.uniform_index(d));
        std::iota(positions.begin(), positions.end(), 0);
        std::vector<std::uint8_t> mask(d, 1);
        for (std::size_t i = 0; i < remove; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(rng.uniform_index(d - i));
            std::swap(positions[i], positions[j]);
            mask[positions[i]] = 0;
        }
        TokenSequence masked;
        masked.reserve(d - remove);
        for (std::size_t p = 0; p < d; ++p) {
            if (mask[p]) masked.push_back(doc[p]);
        }
        out.push_back({std::move(mask), std::move(masked)});
    }
    return out;
}

Explanation explain_tokens(const TokenSequence& doc, const TokenScorer& scorer, const ExplainConfig& cfg) {
    cfg.validate();
    const auto samples = perturb_samples(doc, cfg.n_samples, cfg.seed);
    const auto n = static_cast<Eigen::Index>(samples.size());
    const auto d = static_cast<Eigen::Index>(doc.size());

    Eigen::MatrixXd z(n, d);
    Eigen::VectorXd y(n);
    Eigen::VectorXd w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = samples[static_cast<std::size_t>(i)];
        std::size_t kept = 0;
        for (Eigen::Index j = 0; j < d; ++j) {
            z(i, j) = s.mask[static_cast<std::size_t>(j)];
            kept += s.mask[static_cast<std::size_t>(j)];
        }
        y(i) = scorer(s.doc);
        // cosine distance between the mask and the all-ones original
        const double dist = kept == 0 ? 1.0 : 1.0 - std::sqrt(static_cast<double>(kept) / static_cast<double>(d));
        w(i) = std::exp(-(dist * dist) / (cfg.kernel_width * cfg.kernel_width));
    }

    const double wsum = w.sum();
    const Eigen::RowVectorXd z_mean = (w.transpose() * z) / wsum;
    const double y_mean = w.dot(y) / wsum;
    const Eigen::MatrixXd zc = z.rowwise() - z_mean;
    const Eigen::VectorXd yc = y.array() - y_mean;

    Eigen::MatrixXd gram = zc.transpose() * w.asDiagonal() * zc;
    gram.diagonal().array() += cfg.ridge;
    const Eigen::VectorXd rhs = zc.transpose() * (w.array() * yc.array()).matrix();
    const Eigen::VectorXd coef = gram.ldlt().solve(rhs);
    const double intercept = y_mean - z_mean.dot(coef);

    const Eigen::VectorXd fitted = (z * coef).array() + intercept;
    const double ss_res = (w.array() * (y - fitted).array().square()).sum();
    const double ss_tot = (w.array() * yc.array().square()).sum();
    double fit = 1.0;
    if (ss_tot > 1e-24) fit = 1.0 - ss_res / ss_tot;
    else if (ss_res > 1e-24) fit = 0.0;

    Explanation e;
    e.p_spam = y(0);
    e.p_ham = 1.0 - y(0);
    e.surrogate_fit = std::clamp(fit, 0.0, 1.0);
    e.intercept = intercept;

    std::vector<std::size_t> order(doc.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(coef(static_cast<Eigen::Index>(a))) > std::abs(coef(static_cast<Eigen::Index>(b)));
    });
    order.resize(std::min(order.size(), cfg.top_k));
    for (std::size_t p : order) e.token_weights.push_back({doc[p], p, coef(static_cast<Eigen::Index>(p))});
    return e;
}

Explanation explain(const Pipeline& pipeline, std::string_view raw_text, const ExplainConfig& cfg) {
    pipeline.validate();
    const TokenSequence tokens = pipeline.tokenize(raw_text);
    if (tokens.empty()) throw Error(ErrorKind::EmptyDocument, "text has no tokens after preprocessing");
    return explain_tokens(
        tokens, [&](const TokenSequence& t) { return pipeline.predict_tokens(t).score; }, cfg);
}

}  // namespace mailsift
