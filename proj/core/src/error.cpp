#include "mailsift/error.hpp"

namespace mailsift {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::MissingColumn: return "MissingColumn";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::EmptyDataset: return "EmptyDataset";
        case ErrorKind::BadManifest: return "BadManifest";
        case ErrorKind::EmptyCorpus: return "EmptyCorpus";
        case ErrorKind::NoTokensAboveMinCount: return "NoTokensAboveMinCount";
        case ErrorKind::SingleClassData: return "SingleClassData";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NegativeFeature: return "NegativeFeature";
        case ErrorKind::BadRatio: return "BadRatio";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::EmptyDocument: return "EmptyDocument";
        case ErrorKind::ModelVectorizerMismatch: return "ModelVectorizerMismatch";
        case ErrorKind::UnsupportedVersion: return "UnsupportedVersion";
        case ErrorKind::CorruptArtifact: return "CorruptArtifact";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace mailsift
