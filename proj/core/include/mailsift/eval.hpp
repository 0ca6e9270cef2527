#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mailsift/corpus.hpp"

namespace mailsift {

struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

/// Train size is floor(n * (1 - test_ratio)), test takes the remainder, so
/// 82,486 rows at 0.2 split 65,988 / 16,498. Indices come from a seeded
/// Fisher-Yates shuffle. Throws BadRatio, EmptyInput.
SplitIndices split(std::size_t n, double test_ratio, std::uint64_t seed);
SplitIndices split(const Corpus& corpus, double test_ratio, std::uint64_t seed);

/// Positive class is spam.
struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;

    std::size_t total() const noexcept { return tp + fp + tn + fn; }
    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

/// Throws LengthMismatch, EmptyInput.
ConfusionMatrix confusion(std::span<const Label> predicted, std::span<const Label> truth);

struct Metrics {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// Accuracy, precision, recall and F1. A ratio with a zero denominator is 0.
Metrics metrics(const ConfusionMatrix& cm) noexcept;

/// One line of an evaluation report.
struct ReportRow {
    std::string dataset;
    std::string vectorizer;
    std::string model;
    Metrics metrics;
};

/// "42891[1] 39595[0]"
std::string dataset_label(ClassCounts counts);

void write_report_table(std::ostream& out, std::span<const ReportRow> rows);
void write_report_csv(std::ostream& out, std::span<const ReportRow> rows, bool header = true);

}  // namespace mailsift
