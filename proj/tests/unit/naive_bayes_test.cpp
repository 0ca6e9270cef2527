#include <gtest/gtest.h>

#include <cmath>

#include <mailsift/error.hpp>
#include <mailsift/naive_bayes.hpp>
#include <mailsift/random.hpp>

using namespace mailsift;

namespace {

// vocabulary: cheap pills meds project meeting
SparseVector counts(std::vector<std::pair<SparseVector::Index, double>> e) {
    return SparseVector::from_entries(5, std::move(e));
}

struct Hand {
    std::vector<SparseVector> xs{counts({{0, 1}, {1, 1}}), counts({{0, 1}, {2, 1}}), counts({{3, 1}, {4, 1}})};
    std::vector<Label> ys{Label::Spam, Label::Spam, Label::Ham};
};

// hand Laplace values, frozen
constexpr double kSpamJoint = -3.7013019741124937;  // ln(2/81)
constexpr double kHamJoint = -4.297285406218791;    // ln(2/147)
constexpr double kPosterior = 0.6447368421052632;   // 147/228

}  // namespace

TEST(Mnb, HandLaplace) {
    const Hand h;
    const auto m = train_mnb(h.xs, h.ys, 1.0);
    EXPECT_NEAR(std::exp(m.log_likelihood[1][0]), 1.0 / 3.0, 1e-12);
    EXPECT_NEAR(std::exp(m.log_likelihood[0][0]), 1.0 / 7.0, 1e-12);
    EXPECT_NEAR(std::exp(m.log_prior[1]), 2.0 / 3.0, 1e-12);

    const auto x = counts({{0, 1}, {4, 1}});  // "cheap meeting"
    EXPECT_NEAR(m.joint_log_score(x, Label::Spam), kSpamJoint, 1e-9);
    EXPECT_NEAR(m.joint_log_score(x, Label::Ham), kHamJoint, 1e-9);
    const auto p = m.predict(x);
    EXPECT_EQ(p.label, Label::Spam);
    EXPECT_NEAR(p.score, kPosterior, 1e-9);
}

TEST(Mnb, LikelihoodsSumToOne) {
    Rng rng(11);
    std::vector<SparseVector> xs;
    std::vector<Label> ys;
    for (int i = 0; i < 40; ++i) {
        std::vector<std::pair<SparseVector::Index, double>> e;
        for (SparseVector::Index j = 0; j < 12; ++j)
            if (rng.uniform() < 0.4) e.emplace_back(j, rng.uniform() * 3);
        xs.push_back(SparseVector::from_entries(12, e));
        ys.push_back(i % 3 == 0 ? Label::Spam : Label::Ham);
    }
    for (double alpha : {0.1, 1.0, 5.0}) {
        const auto m = train_mnb(xs, ys, alpha);
        for (int c = 0; c < 2; ++c) {
            double s = 0;
            for (double l : m.log_likelihood[c]) s += std::exp(l);
            EXPECT_NEAR(s, 1.0, 1e-12);
        }
    }
}

TEST(Mnb, SymmetricTieGoesToSpam) {
    const std::vector<SparseVector> xs{counts({{0, 2}, {1, 1}}), counts({{0, 2}, {1, 1}})};
    const std::vector<Label> ys{Label::Spam, Label::Ham};
    const auto m = train_mnb(xs, ys);
    const auto p = m.predict(counts({{0, 1}, {3, 4}}));
    EXPECT_EQ(p.score, 0.5);
    EXPECT_EQ(p.label, Label::Spam);
}

TEST(Mnb, ArgmaxInvariantToUniformCountShift) {
    // both classes see the same extra count on every feature
    const Hand h;
    auto shifted = h.xs;
    for (auto& x : shifted) {
        auto d = x.to_dense();
        for (auto& v : d) v += 1.0;
        x = SparseVector::from_dense(d);
    }
    // rebalance: one ham row per spam row so the shift is symmetric in totals
    std::vector<SparseVector> xs{h.xs[0], h.xs[2]};
    std::vector<Label> ys{Label::Spam, Label::Ham};
    std::vector<SparseVector> xs2{shifted[0], shifted[2]};
    const auto a = train_mnb(xs, ys);
    const auto b = train_mnb(xs2, ys);
    for (const auto& q : {counts({{0, 1}}), counts({{4, 1}}), counts({{1, 2}, {3, 1}})})
        EXPECT_EQ(a.predict(q).label, b.predict(q).label);
}

TEST(Mnb, Errors) {
    const Hand h;
    auto kind = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    auto neg = h.xs;
    neg[0] = counts({{0, -1}});
    EXPECT_EQ(kind([&] { train_mnb(neg, h.ys); }), ErrorKind::NegativeFeature);
    EXPECT_EQ(kind([&] { train_mnb(h.xs, std::vector<Label>(3, Label::Ham)); }), ErrorKind::SingleClassData);
    EXPECT_THROW(train_mnb(h.xs, h.ys, 0.0), Error);
}
