#pragma once

#include "mailsift/corpus.hpp"

namespace mailsift {

/// Decision threshold on the spam score; ties go to spam.
inline constexpr double kDecisionThreshold = 0.5;

struct Prediction {
    Label label = Label::Ham;
    double score = 0.0;   // spam-probability estimate in [0, 1]
    double margin = 0.0;  // raw model output
};

inline Prediction make_prediction(double score, double margin) noexcept {
    return {score >= kDecisionThreshold ? Label::Spam : Label::Ham, score, margin};
}

}  // namespace mailsift
