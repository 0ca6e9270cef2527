#include <gtest/gtest.h>

#include <mailsift/classifier.hpp>
#include <mailsift/error.hpp>
#include <mailsift/svm.hpp>

#include "test_support.hpp"

using namespace mailsift;
using mailsift::testing::separable_blobs;

TEST(Svm, SymmetricPair) {
    const std::vector<SparseVector> xs{SparseVector::from_dense(std::vector<double>{-1.0}),
                                       SparseVector::from_dense(std::vector<double>{1.0})};
    const std::vector<Label> ys{Label::Ham, Label::Spam};
    const auto m = train_svm(xs, ys);
    EXPECT_EQ(m.predict(xs[0]).label, Label::Ham);
    EXPECT_EQ(m.predict(xs[1]).label, Label::Spam);
    EXPECT_LT(m.margin(xs[0]), 0.0);
    EXPECT_GT(m.margin(xs[1]), 0.0);
}

TEST(Svm, SeparableBlobsFitPerfectly) {
    const auto d = separable_blobs();
    // the construction is separable with margin >= 1 by w = (1/2, 1/2)
    for (std::size_t i = 0; i < d.xs.size(); ++i) {
        const double y = d.ys[i] == Label::Spam ? 1.0 : -1.0;
        ASSERT_GE(y * 0.5 * (d.xs[i].at(0) + d.xs[i].at(1)), 1.0);
    }
    SvmTrace trace;
    const auto m = train_svm(d.xs, d.ys, {}, &trace);
    for (std::size_t i = 0; i < d.xs.size(); ++i) EXPECT_EQ(m.predict(d.xs[i]).label, d.ys[i]) << i;
    ASSERT_EQ(trace.objective.size(), 20u);
    for (std::size_t e = 1; e < trace.objective.size(); ++e)
        EXPECT_LE(trace.objective[e], trace.objective[e - 1] + 1e-12) << "epoch " << e;
    EXPECT_NEAR(trace.objective.back(), svm_objective(m, d.xs, d.ys), 1e-12);
}

TEST(Svm, ObjectiveNonIncreasingOnNoisyData) {
    const auto d = mailsift::testing::synthetic_matrix(300, 20, 3);
    SvmTrace trace;
    train_svm(d.xs, d.ys, {}, &trace);
    for (std::size_t e = 1; e < trace.objective.size(); ++e)
        EXPECT_LE(trace.objective[e], trace.objective[e - 1] + 1e-12) << "epoch " << e;
}

TEST(Svm, DeterministicForSeed) {
    const auto d = mailsift::testing::synthetic_matrix(100, 10, 1);
    const auto a = train_svm(d.xs, d.ys);
    const auto b = train_svm(d.xs, d.ys);
    EXPECT_EQ(a.weights, b.weights);
    EXPECT_EQ(a.bias, b.bias);
}

TEST(Svm, ZeroModelTiesToSpam) {
    SvmModel m;
    m.weights = {0.0, 0.0};
    const auto p = m.predict(SparseVector::from_dense(std::vector<double>{3.0, -1.0}));
    EXPECT_EQ(p.margin, 0.0);
    EXPECT_EQ(p.score, 0.5);
    EXPECT_EQ(p.label, Label::Spam);
}

TEST(Svm, Errors) {
    const std::vector<SparseVector> xs{SparseVector::from_dense(std::vector<double>{1.0}),
                                       SparseVector::from_dense(std::vector<double>{2.0})};
    try {
        train_svm(xs, std::vector<Label>{Label::Spam, Label::Spam});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SingleClassData);
    }
    const std::vector<SparseVector> mixed{SparseVector::from_dense(std::vector<double>{1.0}),
                                          SparseVector::from_dense(std::vector<double>{2.0, 1.0})};
    try {
        train_svm(mixed, std::vector<Label>{Label::Spam, Label::Ham});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
    const auto m = train_svm(xs, std::vector<Label>{Label::Spam, Label::Ham});
    try {
        predict(ClassifierModel{m}, SparseVector(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
}
