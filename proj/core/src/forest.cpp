#include "mailsift/forest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <numeric>
#include <thread>

#include "mailsift/error.hpp"
#include "mailsift/random.hpp"

namespace mailsift {

std::size_t DecisionTree::leaf_for(const SparseVector& x) const {
    std::size_t i = 0;
    while (!is_leaf(i)) {
        const auto& node = nodes[i];
        i = x.at(static_cast<SparseVector::Index>(node.feature)) <= node.threshold ? node.left : node.right;
    }
    return i;
}

std::size_t DecisionTree::depth() const {
    std::size_t best = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [i, d] = stack.back();
        stack.pop_back();
        best = std::max(best, d);
        if (!is_leaf(i)) {
            stack.emplace_back(nodes[i].left, d + 1);
            stack.emplace_back(nodes[i].right, d + 1);
        }
    }
    return best;
}

bool operator==(const DecisionTree& a, const DecisionTree& b) {
    if (a.nodes.size() != b.nodes.size()) return false;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        const auto& x = a.nodes[i];
        const auto& y = b.nodes[i];
        if (x.feature != y.feature || x.left != y.left || x.right != y.right || x.vote != y.vote) return false;
        if (std::memcmp(&x.threshold, &y.threshold, sizeof(double)) != 0) return false;
    }
    return true;
}

Prediction RfModel::predict(const SparseVector& x) const {
    if (x.dim() != n_features) {
        throw Error(ErrorKind::DimensionMismatch,
                    "forest expects " + std::to_string(n_features) + " features, got " + std::to_string(x.dim()));
    }
    if (trees.empty()) throw Error(ErrorKind::InvalidArgument, "forest has no trees");
    std::size_t spam = 0;
    for (const auto& tree : trees) spam += tree.vote(x) == Label::Spam ? 1 : 0;
    const double score = static_cast<double>(spam) / static_cast<double>(trees.size());
    return make_prediction(score, 2.0 * score - 1.0);
}

namespace {

// Column-major copy of the training rows.
struct ColumnIndex {
    std::vector<std::size_t> offsets;  // dim + 1
    std::vector<std::uint32_t> rows;
    std::vector<double> values;

    ColumnIndex(std::span<const SparseVector> xs, std::size_t dim) : offsets(dim + 1, 0) {
        for (const auto& x : xs) {
            for (auto f : x.indices()) ++offsets[f + 1];
        }
        std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
        rows.resize(offsets.back());
        values.resize(offsets.back());
        std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
        for (std::size_t r = 0; r < xs.size(); ++r) {
            auto idx = xs[r].indices();
            auto val = xs[r].values();
            for (std::size_t k = 0; k < idx.size(); ++k) {
                const std::size_t pos = cursor[idx[k]]++;
                rows[pos] = static_cast<std::uint32_t>(r);
                values[pos] = val[k];
            }
        }
    }

    std::size_t length(std::size_t f) const { return offsets[f + 1] - offsets[f]; }
};

struct Split {
    std::int32_t feature = -1;
    double threshold = 0.0;
    double impurity = 0.0;  // weighted child Gini sum
};

double gini_mass(double w0, double w1) {
    const double total = w0 + w1;
    if (total <= 0.0) return 0.0;
    return total - (w0 * w0 + w1 * w1) / total;  // total * gini
}

class TreeBuilder {
public:
    TreeBuilder(std::span<const SparseVector> xs, std::span<const Label> ys, const ColumnIndex& columns,
                const RfParams& params, std::size_t max_features, std::uint64_t seed)
        : xs_(xs), ys_(ys), columns_(columns), params_(params), max_features_(max_features), rng_(seed),
          dim_(xs.front().dim()), features_(dim_), stamp_(xs.size(), 0), weight_(xs.size(), 0.0) {
        std::iota(features_.begin(), features_.end(), 0);
    }

    DecisionTree build() {
        const std::size_t n = xs_.size();
        for (std::size_t i = 0; i < n; ++i) weight_[rng_.uniform_index(n)] += 1.0;
        std::vector<std::uint32_t> samples;
        for (std::size_t r = 0; r < n; ++r) {
            if (weight_[r] > 0.0) samples.push_back(static_cast<std::uint32_t>(r));
        }
        samples_ = std::move(samples);

        DecisionTree tree;
        tree.nodes.emplace_back();
        struct Task {
            std::size_t node, begin, end, depth;
        };
        std::vector<Task> stack{{0, 0, samples_.size(), 0}};
        while (!stack.empty()) {
            const Task task = stack.back();
            stack.pop_back();

            double w0 = 0.0;
            double w1 = 0.0;
            for (std::size_t i = task.begin; i < task.end; ++i) {
                (ys_[samples_[i]] == Label::Spam ? w1 : w0) += weight_[samples_[i]];
            }
            tree.nodes[task.node].vote = w1 >= w0 ? Label::Spam : Label::Ham;

            const bool pure = w0 == 0.0 || w1 == 0.0;
            const bool depth_capped = params_.max_depth > 0 && task.depth >= params_.max_depth;
            const double leaf = static_cast<double>(params_.min_samples_leaf);
            if (pure || depth_capped || w0 + w1 < 2.0 * leaf) continue;

            const Split split = find_split(task.begin, task.end, w0, w1);
            if (split.feature < 0) continue;

            const auto f = static_cast<SparseVector::Index>(split.feature);
            auto first = samples_.begin() + static_cast<std::ptrdiff_t>(task.begin);
            auto last = samples_.begin() + static_cast<std::ptrdiff_t>(task.end);
            auto mid = std::stable_partition(first, last, [&](std::uint32_t r) {
                return xs_[r].at(f) <= split.threshold;
            });
            const std::size_t cut = static_cast<std::size_t>(mid - samples_.begin());

            const auto left = static_cast<std::uint32_t>(tree.nodes.size());
            tree.nodes.emplace_back();
            tree.nodes.emplace_back();
            auto& node = tree.nodes[task.node];
            node.feature = split.feature;
            node.threshold = split.threshold;
            node.left = left;
            node.right = left + 1;
            // right pushed first so the left subtree is expanded first
            stack.push_back({left + 1, cut, task.end, task.depth + 1});
            stack.push_back({left, task.begin, cut, task.depth + 1});
        }
        return tree;
    }

private:
    struct Point {
        double value;
        double w0;
        double w1;
    };

    // Non-zero values of feature f over the node's samples.
    void gather(std::size_t f, std::size_t begin, std::size_t end, std::vector<Point>& out) {
        out.clear();
        const std::size_t m = end - begin;
        const std::size_t col_len = columns_.length(f);
        if (m * 8 < col_len) {
            for (std::size_t i = begin; i < end; ++i) {
                const auto r = samples_[i];
                const double v = xs_[r].at(static_cast<SparseVector::Index>(f));
                if (v != 0.0) push(out, v, r);
            }
        } else {
            for (std::size_t k = columns_.offsets[f]; k < columns_.offsets[f + 1]; ++k) {
                const auto r = columns_.rows[k];
                if (stamp_[r] == current_stamp_) push(out, columns_.values[k], r);
            }
        }
    }

    void push(std::vector<Point>& out, double v, std::uint32_t r) const {
        const double w = weight_[r];
        out.push_back({v, ys_[r] == Label::Spam ? 0.0 : w, ys_[r] == Label::Spam ? w : 0.0});
    }

    // Best threshold on one feature; false when the feature is constant here.
    bool best_threshold(std::vector<Point>& pts, double w0, double w1, Split& best, std::int32_t feature) {
        double nz0 = 0.0;
        double nz1 = 0.0;
        for (const auto& p : pts) {
            nz0 += p.w0;
            nz1 += p.w1;
        }
        const double z0 = w0 - nz0;
        const double z1 = w1 - nz1;
        if (z0 + z1 > 1e-12) pts.push_back({0.0, z0, z1});
        if (pts.size() < 2) return false;
        std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.value < b.value; });
        if (pts.front().value == pts.back().value) return false;

        const double min_leaf = static_cast<double>(params_.min_samples_leaf);
        double l0 = 0.0;
        double l1 = 0.0;
        bool found = false;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            l0 += pts[i].w0;
            l1 += pts[i].w1;
            if (pts[i].value == pts[i + 1].value) continue;
            const double r0 = w0 - l0;
            const double r1 = w1 - l1;
            if (l0 + l1 < min_leaf || r0 + r1 < min_leaf) continue;
            const double impurity = gini_mass(l0, l1) + gini_mass(r0, r1);
            if (best.feature < 0 || impurity < best.impurity) {
                const double a = pts[i].value;
                const double b = pts[i + 1].value;
                double threshold = a + (b - a) / 2.0;
                if (!(threshold >= a && threshold < b)) threshold = a;
                best = {feature, threshold, impurity};
            }
            found = true;
        }
        return found;
    }

    Split find_split(std::size_t begin, std::size_t end, double w0, double w1) {
        ++current_stamp_;
        for (std::size_t i = begin; i < end; ++i) stamp_[samples_[i]] = current_stamp_;

        // Draw features without replacement; look at max_features of them,
        // and keep drawing past that only until one admits a split.
        Split best;
        std::size_t drawn = 0;
        for (; drawn < dim_; ++drawn) {
            if (drawn >= max_features_ && best.feature >= 0) break;
            const std::size_t j = drawn + static_cast<std::size_t>(rng_.uniform_index(dim_ - drawn));
            std::swap(features_[drawn], features_[j]);
            const std::size_t f = features_[drawn];
            gather(f, begin, end, points_);
            best_threshold(points_, w0, w1, best, static_cast<std::int32_t>(f));
        }
        return best;
    }

    std::span<const SparseVector> xs_;
    std::span<const Label> ys_;
    const ColumnIndex& columns_;
    const RfParams& params_;
    std::size_t max_features_;
    Rng rng_;
    std::size_t dim_;
    std::vector<std::size_t> features_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t current_stamp_ = 0;
    std::vector<double> weight_;
    std::vector<std::uint32_t> samples_;
    std::vector<Point> points_;
};

}  // namespace

RfModel train_rf(std::span<const SparseVector> xs, std::span<const Label> ys, const RfParams& params) {
    if (xs.size() != ys.size()) throw Error(ErrorKind::DimensionMismatch, "feature rows and labels differ in count");
    if (xs.size() < 2) throw Error(ErrorKind::InvalidArgument, "need at least two training rows");
    if (params.n_trees == 0) throw Error(ErrorKind::InvalidArgument, "n_trees must be >= 1");
    if (params.min_samples_leaf == 0) throw Error(ErrorKind::InvalidArgument, "min_samples_leaf must be >= 1");
    const std::size_t dim = xs.front().dim();
    if (dim == 0) throw Error(ErrorKind::InvalidArgument, "zero-width features");
    for (const auto& x : xs) {
        if (x.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "feature rows differ in width");
    }

    std::size_t max_features = params.max_features;
    if (max_features == 0) {
        max_features = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(dim))));
    }
    max_features = std::clamp<std::size_t>(max_features, 1, dim);

    const ColumnIndex columns(xs, dim);
    RfModel model;
    model.n_features = dim;
    model.params = params;
    model.trees.resize(params.n_trees);

    std::size_t threads = params.threads ? params.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, params.n_trees);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < params.n_trees; t = next++) {
            TreeBuilder builder(xs, ys, columns, params, max_features, params.seed + t);
            model.trees[t] = builder.build();
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    }
    return model;
}

}  // namespace mailsift
