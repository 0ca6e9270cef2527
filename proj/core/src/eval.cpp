#include "mailsift/eval.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>

#include "mailsift/error.hpp"
#include "mailsift/random.hpp"

namespace mailsift {

SplitIndices split(std::size_t n, double test_ratio, std::uint64_t seed) {
    if (!(test_ratio > 0.0 && test_ratio < 1.0)) {
        throw Error(ErrorKind::BadRatio, "test ratio must lie in (0, 1), got " + std::to_string(test_ratio));
    }
    if (n == 0) throw Error(ErrorKind::EmptyInput, "cannot split an empty corpus");

    // The epsilon absorbs representation error in 1 - ratio (0.8 * 10 must be 8).
    const auto n_train = static_cast<std::size_t>(std::floor(static_cast<double>(n) * (1.0 - test_ratio) + 1e-9));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    rng.shuffle(std::span<std::size_t>(order));

    SplitIndices out;
    out.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_train));
    out.test.assign(order.begin() + static_cast<std::ptrdiff_t>(n_train), order.end());
    return out;
}

SplitIndices split(const Corpus& corpus, double test_ratio, std::uint64_t seed) {
    return split(corpus.size(), test_ratio, seed);
}

ConfusionMatrix confusion(std::span<const Label> predicted, std::span<const Label> truth) {
    if (predicted.size() != truth.size()) {
        throw Error(ErrorKind::LengthMismatch, std::to_string(predicted.size()) + " predictions for " +
                                                   std::to_string(truth.size()) + " labels");
    }
    if (predicted.empty()) throw Error(ErrorKind::EmptyInput, "no predictions");
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const bool p = predicted[i] == Label::Spam;
        const bool t = truth[i] == Label::Spam;
        if (p && t) ++cm.tp;
        else if (p) ++cm.fp;
        else if (t) ++cm.fn;
        else ++cm.tn;
    }
    return cm;
}

Metrics metrics(const ConfusionMatrix& cm) noexcept {
    auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };
    const double tp = static_cast<double>(cm.tp);
    Metrics m;
    m.accuracy = ratio(tp + static_cast<double>(cm.tn), static_cast<double>(cm.total()));
    m.precision = ratio(tp, tp + static_cast<double>(cm.fp));
    m.recall = ratio(tp, tp + static_cast<double>(cm.fn));
    m.f1 = ratio(2.0 * m.precision * m.recall, m.precision + m.recall);
    return m;
}

std::string dataset_label(ClassCounts counts) {
    return std::to_string(counts.spam) + "[1] " + std::to_string(counts.ham) + "[0]";
}

void write_report_table(std::ostream& out, std::span<const ReportRow> rows) {
    std::size_t dw = 7;
    for (const auto& r : rows) dw = std::max(dw, r.dataset.size());
    const auto flags = out.flags();
    out << std::left << std::setw(10) << "Model" << std::setw(14) << "Vectorizer" << std::setw(static_cast<int>(dw) + 2)
        << "Dataset" << std::right << std::setw(10) << "Accuracy" << std::setw(11) << "Precision" << std::setw(8)
        << "Recall" << std::setw(10) << "F1-score" << '\n';
    out << std::fixed << std::setprecision(4);
    for (const auto& r : rows) {
        out << std::left << std::setw(10) << r.model << std::setw(14) << r.vectorizer
            << std::setw(static_cast<int>(dw) + 2) << r.dataset << std::right << std::setw(10) << r.metrics.accuracy
            << std::setw(11) << r.metrics.precision << std::setw(8) << r.metrics.recall << std::setw(10)
            << r.metrics.f1 << '\n';
    }
    out.flags(flags);
}

void write_report_csv(std::ostream& out, std::span<const ReportRow> rows, bool header) {
    if (header) out << "dataset,vectorizer,model,accuracy,precision,recall,f1\n";
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(17);
    for (const auto& r : rows) {
        out << '"' << r.dataset << "\"," << r.vectorizer << ',' << r.model << ',' << r.metrics.accuracy << ','
            << r.metrics.precision << ',' << r.metrics.recall << ',' << r.metrics.f1 << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

}  // namespace mailsift
