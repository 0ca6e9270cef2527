#pragma once

#include <string_view>
#include <variant>

#include "mailsift/forest.hpp"
#include "mailsift/naive_bayes.hpp"
#include "mailsift/svm.hpp"

namespace mailsift {

using ClassifierModel = std::variant<SvmModel, MnbModel, RfModel>;

enum class ModelKind { Svm, Mnb, Rf };

std::string_view to_string(ModelKind kind) noexcept;
std::optional<ModelKind> parse_model_kind(std::string_view tag) noexcept;

ModelKind kind_of(const ClassifierModel& model) noexcept;
std::size_t feature_dim(const ClassifierModel& model) noexcept;

/// Throws DimensionMismatch when x.dim() differs from the model's.
Prediction predict(const ClassifierModel& model, const SparseVector& x);

}  // namespace mailsift
