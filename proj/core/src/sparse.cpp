#include "mailsift/sparse.hpp"

#include <algorithm>

#include "mailsift/error.hpp"

namespace mailsift {

SparseVector SparseVector::from_entries(std::size_t dim, std::vector<std::pair<Index, double>> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector v(dim);
    for (const auto& [index, value] : entries) {
        if (index >= dim) {
            throw Error(ErrorKind::DimensionMismatch,
                        "index " + std::to_string(index) + " >= dim " + std::to_string(dim));
        }
        if (!v.indices_.empty() && v.indices_.back() == index) {
            v.values_.back() += value;
        } else {
            v.indices_.push_back(index);
            v.values_.push_back(value);
        }
    }
    v.transform_values([](double x) { return x; });
    return v;
}

SparseVector SparseVector::from_dense(std::span<const double> values) {
    SparseVector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] != 0.0) {
            v.indices_.push_back(static_cast<Index>(i));
            v.values_.push_back(values[i]);
        }
    }
    return v;
}

double SparseVector::at(Index index) const noexcept {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
    if (it == indices_.end() || *it != index) return 0.0;
    return values_[static_cast<std::size_t>(it - indices_.begin())];
}

double SparseVector::dot(std::span<const double> dense) const noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < indices_.size(); ++i) sum += values_[i] * dense[indices_[i]];
    return sum;
}

double SparseVector::squared_norm() const noexcept {
    double sum = 0.0;
    for (double v : values_) sum += v * v;
    return sum;
}

std::vector<double> SparseVector::to_dense() const {
    std::vector<double> out(dim_, 0.0);
    for (std::size_t i = 0; i < indices_.size(); ++i) out[indices_[i]] = values_[i];
    return out;
}

}  // namespace mailsift
