#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mailsift/pipeline.hpp"
#include "mailsift/textprep.hpp"

namespace mailsift {

struct ExplainConfig {
    std::size_t n_samples = 1000;
    double kernel_width = 25.0;
    std::size_t top_k = 10;
    std::uint64_t seed = 42;
    double ridge = 1.0;

    /// Throws InvalidArgument on a zero sample count, top_k or width.
    void validate() const;
};

struct TokenWeight {
    std::string token;
    std::size_t position = 0;  // index into the preprocessed token sequence
    double weight = 0.0;       // > 0 pushes toward spam
};

struct Explanation {
    double p_ham = 0.0;
    double p_spam = 0.0;
    std::vector<TokenWeight> token_weights;  // by |weight| desc, then position
    double surrogate_fit = 0.0;              // weighted R^2, clamped to [0, 1]
    double intercept = 0.0;
};

struct PerturbationSample {
    std::vector<std::uint8_t> mask;  // 1 keeps the token at that position
    TokenSequence doc;
};

/// Sample 0 is the untouched document. Each later sample draws a removal
/// count uniformly from [1, len] and drops that many distinct positions.
/// Throws EmptyDocument.
std::vector<PerturbationSample> perturb_samples(const TokenSequence& doc, std::size_t n,
                                                std::uint64_t seed);

/// Spam score of a (possibly masked) token sequence.
using TokenScorer = std::function<double(const TokenSequence&)>;

/// Local surrogate around `doc`: score every perturbation, weight it by
/// exp(-d^2 / width^2) with d the cosine distance of its mask to the
/// all-ones mask, and fit ridge-regularized weighted least squares (free
/// intercept) from mask indicators to scores. Throws EmptyDocument.
Explanation explain_tokens(const TokenSequence& doc, const TokenScorer& scorer, const ExplainConfig& cfg);

/// Preprocesses `raw_text` with the pipeline and explains its spam score.
/// Throws EmptyDocument, ModelVectorizerMismatch.
Explanation explain(const Pipeline& pipeline, std::string_view raw_text, const ExplainConfig& cfg);

}  // namespace mailsift
