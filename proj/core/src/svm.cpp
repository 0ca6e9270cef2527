#include "mailsift/svm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mailsift/error.hpp"
#include "mailsift/random.hpp"

namespace mailsift {

namespace {

double to_sign(Label y) noexcept { return y == Label::Spam ? 1.0 : -1.0; }

void check_training_set(std::span<const SparseVector> xs, std::span<const Label> ys) {
    if (xs.size() != ys.size()) {
        throw Error(ErrorKind::DimensionMismatch, "feature rows and labels differ in count");
    }
    if (xs.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two training rows");
    const std::size_t dim = xs.front().dim();
    for (const auto& x : xs) {
        if (x.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "feature rows differ in width");
    }
    const auto spam = std::count(ys.begin(), ys.end(), Label::Spam);
    if (spam == 0 || spam == static_cast<std::ptrdiff_t>(ys.size())) {
        throw Error(ErrorKind::SingleClassData, "training labels contain a single class");
    }
}

// w = scale * v, with the bias stored as the last coordinate of v.
class ScaledWeights {
public:
    explicit ScaledWeights(std::size_t dim) : v_(dim + 1, 0.0) {}

    double margin(const SparseVector& x) const { return scale_ * (x.dot(v_) + v_.back()); }

    void shrink(double factor) {
        if (factor <= 0.0) {
            std::fill(v_.begin(), v_.end(), 0.0);
            scale_ = 1.0;
            sq_norm_ = 0.0;
            return;
        }
        scale_ *= factor;
        if (scale_ < 1e-9) fold_scale();
    }

    void add(const SparseVector& x, double coef) {
        const double c = coef / scale_;
        auto idx = x.indices();
        auto val = x.values();
        for (std::size_t i = 0; i < idx.size(); ++i) {
            double& w = v_[idx[i]];
            const double nw = w + c * val[i];
            sq_norm_ += nw * nw - w * w;
            w = nw;
        }
        double& b = v_.back();
        const double nb = b + c;
        sq_norm_ += nb * nb - b * b;
        b = nb;
    }

    double norm() const { return scale_ * std::sqrt(std::max(sq_norm_, 0.0)); }

    void recompute_norm() {
        sq_norm_ = std::inner_product(v_.begin(), v_.end(), v_.begin(), 0.0);
    }

    void accumulate_into(std::vector<double>& sum) const {
        for (std::size_t i = 0; i < v_.size(); ++i) sum[i] += scale_ * v_[i];
    }

private:
    void fold_scale() {
        for (double& w : v_) w *= scale_;
        scale_ = 1.0;
        recompute_norm();
    }

    std::vector<double> v_;
    double scale_ = 1.0;
    double sq_norm_ = 0.0;
};

}  // namespace

double SvmModel::margin(const SparseVector& x) const {
    if (x.dim() != weights.size()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "svm expects " + std::to_string(weights.size()) + " features, got " + std::to_string(x.dim()));
    }
    return x.dot(weights) + bias;
}

Prediction SvmModel::predict(const SparseVector& x) const {
    const double m = margin(x);
    return make_prediction(1.0 / (1.0 + std::exp(-m)), m);
}

double svm_objective(const SvmModel& model, std::span<const SparseVector> xs, std::span<const Label> ys) {
    const double lambda = 1.0 / (model.params.C * static_cast<double>(xs.size()));
    double reg = model.bias * model.bias;
    for (double w : model.weights) reg += w * w;
    double hinge = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        hinge += std::max(0.0, 1.0 - to_sign(ys[i]) * model.margin(xs[i]));
    }
    return 0.5 * lambda * reg + hinge / static_cast<double>(xs.size());
}

SvmModel train_svm(std::span<const SparseVector> xs, std::span<const Label> ys, const SvmParams& params,
                   SvmTrace* trace) {
    check_training_set(xs, ys);
    if (!(params.C > 0.0)) throw Error(ErrorKind::InvalidArgument, "C must be > 0");
    if (params.epochs == 0) throw Error(ErrorKind::InvalidArgument, "epochs must be >= 1");

    const std::size_t n = xs.size();
    const std::size_t dim = xs.front().dim();
    const double lambda = 1.0 / (params.C * static_cast<double>(n));
    const double radius = 1.0 / std::sqrt(lambda);

    Rng rng(params.seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);

    ScaledWeights w(dim);
    std::vector<double> sum(dim + 1, 0.0);
    SvmModel model;
    model.params = params;
    if (trace) trace->objective.clear();

    std::size_t t = 0;
    for (std::size_t epoch = 1; epoch <= params.epochs; ++epoch) {
        rng.shuffle(std::span<std::size_t>(order));
        for (std::size_t i : order) {
            ++t;
            const double eta = 1.0 / (lambda * static_cast<double>(t));
            const double y = to_sign(ys[i]);
            const bool violated = y * w.margin(xs[i]) < 1.0;
            w.shrink(1.0 - 1.0 / static_cast<double>(t));
            if (violated) w.add(xs[i], eta * y);
            if (const double norm = w.norm(); norm > radius) w.shrink(radius / norm);
        }
        w.recompute_norm();
        w.accumulate_into(sum);

        const double inv = 1.0 / static_cast<double>(epoch);
        model.weights.assign(dim, 0.0);
        for (std::size_t j = 0; j < dim; ++j) model.weights[j] = sum[j] * inv;
        model.bias = sum[dim] * inv;
        if (trace) trace->objective.push_back(svm_objective(model, xs, ys));
    }
    return model;
}

}  // namespace mailsift
