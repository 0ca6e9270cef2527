#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mailsift/corpus.hpp"
#include "mailsift/prediction.hpp"
#include "mailsift/sparse.hpp"

namespace mailsift {

struct RfParams {
    std::size_t n_trees = 100;
    std::size_t max_features = 0;  // candidates per node; 0 means floor(sqrt(dim))
    std::uint64_t seed = 42;
    std::size_t threads = 0;       // 0 means hardware concurrency
    std::size_t max_depth = 0;     // 0 means unlimited
    std::size_t min_samples_leaf = 1;
};

/// CART tree. Internal nodes send x to `left` when x[feature] <= threshold.
struct DecisionTree {
    struct Node {
        std::int32_t feature = -1;  // -1 marks a leaf
        double threshold = 0.0;
        std::uint32_t left = 0;
        std::uint32_t right = 0;
        Label vote = Label::Ham;
    };

    std::vector<Node> nodes;  // nodes[0] is the root

    bool is_leaf(std::size_t i) const noexcept { return nodes[i].feature < 0; }
    std::size_t leaf_for(const SparseVector& x) const;
    Label vote(const SparseVector& x) const { return nodes[leaf_for(x)].vote; }
    std::size_t depth() const;

    friend bool operator==(const DecisionTree& a, const DecisionTree& b);
};

struct RfModel {
    std::vector<DecisionTree> trees;
    std::size_t n_features = 0;
    RfParams params;

    /// score = fraction of trees voting spam.
    Prediction predict(const SparseVector& x) const;
};

/// Trees are built on bootstrap samples with Gini splits over a random
/// subset of features per node. Tree i draws from its own generator seeded
/// with seed + i, so the forest does not depend on the thread count.
/// Throws DimensionMismatch, InvalidArgument.
RfModel train_rf(std::span<const SparseVector> xs, std::span<const Label> ys, const RfParams& params = {});

}  // namespace mailsift
