#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mailsift {

/// Sorted (index, value) pairs with value != 0 and index < dim. Dense
/// features (document embeddings) use the same carrier via from_dense().
class SparseVector {
public:
    using Index = std::uint32_t;

    SparseVector() = default;
    explicit SparseVector(std::size_t dim) : dim_(dim) {}

    /// Entries may arrive unsorted; duplicates are summed and zeros dropped.
    static SparseVector from_entries(std::size_t dim, std::vector<std::pair<Index, double>> entries);
    static SparseVector from_dense(std::span<const double> values);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t nnz() const noexcept { return indices_.size(); }
    std::span<const Index> indices() const noexcept { return indices_; }
    std::span<const double> values() const noexcept { return values_; }

    /// Binary search; 0 for absent indices.
    double at(Index index) const noexcept;
    double dot(std::span<const double> dense) const noexcept;
    double squared_norm() const noexcept;
    std::vector<double> to_dense() const;

    /// In-place transform of stored values; zeros produced are removed.
    template <typename F>
    void transform_values(F&& f) {
        std::size_t out = 0;
        for (std::size_t i = 0; i < values_.size(); ++i) {
            const double v = f(values_[i]);
            if (v != 0.0) {
                indices_[out] = indices_[i];
                values_[out] = v;
                ++out;
            }
        }
        indices_.resize(out);
        values_.resize(out);
    }

    friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Index> indices_;
    std::vector<double> values_;
};

}  // namespace mailsift
