#pragma once

#include <stdexcept>
#include <string>

namespace mailsift {

/// Every failure the library reports is one of these kinds.
enum class ErrorKind {
    // corpus
    MissingColumn,
    IoError,
    EmptyDataset,
    BadManifest,
    // vectorize
    EmptyCorpus,
    NoTokensAboveMinCount,
    // classifiers
    SingleClassData,
    DimensionMismatch,
    NegativeFeature,
    // eval
    BadRatio,
    LengthMismatch,
    EmptyInput,
    // explain
    EmptyDocument,
    ModelVectorizerMismatch,
    // artifact
    UnsupportedVersion,
    CorruptArtifact,
    // generic
    InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mailsift
