#include "mailsift/classifier.hpp"

#include "strings.hpp"

namespace mailsift {

std::string_view to_string(ModelKind kind) noexcept {
    switch (kind) {
        case ModelKind::Svm: return "svm";
        case ModelKind::Mnb: return "mnb";
        case ModelKind::Rf: return "rf";
    }
    return "unknown";
}

std::optional<ModelKind> parse_model_kind(std::string_view tag) noexcept {
    const auto t = detail::to_lower(detail::trim(tag));
    if (t == "svm") return ModelKind::Svm;
    if (t == "mnb") return ModelKind::Mnb;
    if (t == "rf") return ModelKind::Rf;
    return std::nullopt;
}

ModelKind kind_of(const ClassifierModel& model) noexcept { return static_cast<ModelKind>(model.index()); }

std::size_t feature_dim(const ClassifierModel& model) noexcept {
    struct {
        std::size_t operator()(const SvmModel& m) const { return m.dim(); }
        std::size_t operator()(const MnbModel& m) const { return m.n_features; }
        std::size_t operator()(const RfModel& m) const { return m.n_features; }
    } visitor;
    return std::visit(visitor, model);
}

Prediction predict(const ClassifierModel& model, const SparseVector& x) {
    return std::visit([&](const auto& m) { return m.predict(x); }, model);
}

}  // namespace mailsift
