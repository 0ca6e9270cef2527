#include <gtest/gtest.h>

#include <cmath>

#include <mailsift/error.hpp>
#include <mailsift/random.hpp>
#include <mailsift/tfidf.hpp>

using namespace mailsift;

namespace {

const std::vector<TokenSequence> kHand{{"money", "money", "free"}, {"meeting", "today"}};

// (2/3) * ln 2, computed by hand and frozen
constexpr double kMoneyTfIdf = 0.46209812037329684;

std::vector<TokenSequence> random_corpus(Rng& rng, std::size_t docs, std::size_t vocab) {
    std::vector<TokenSequence> out(docs);
    for (auto& d : out) {
        const auto len = rng.uniform_index(12);
        for (std::size_t i = 0; i < len; ++i) d.push_back("w" + std::to_string(rng.uniform_index(vocab)));
    }
    return out;
}

}  // namespace

TEST(TfIdfFit, HandCorpus) {
    const auto m = TfIdfModel::fit(kHand);
    EXPECT_EQ(m.n_docs(), 2u);
    EXPECT_EQ(m.tokens(), (std::vector<std::string>{"money", "free", "meeting", "today"}));
    const auto money = *m.index_of("money");
    EXPECT_EQ(m.doc_freq()[money], 1u);
    EXPECT_NEAR(m.idf()[money], std::log(2.0), 1e-15);
    EXPECT_FALSE(m.index_of("absent").has_value());
}

TEST(TfIdfTransform, HandValue) {
    const auto m = TfIdfModel::fit(kHand);
    const auto v = m.transform(kHand[0]);
    EXPECT_NEAR(v.at(static_cast<SparseVector::Index>(*m.index_of("money"))), kMoneyTfIdf, 1e-9);
    EXPECT_NEAR(v.at(static_cast<SparseVector::Index>(*m.index_of("free"))), std::log(2.0) / 3, 1e-12);
    EXPECT_EQ(v.nnz(), 2u);
}

TEST(TfIdfTransform, DegenerateInputs) {
    const auto m = TfIdfModel::fit(kHand);
    EXPECT_EQ(m.transform({"zzz", "yyy"}).nnz(), 0u);
    EXPECT_EQ(m.transform({}).nnz(), 0u);
    EXPECT_EQ(m.transform({}).dim(), 4u);
    // OOV tokens still count toward the length
    const auto v = m.transform({"money", "zzz"});
    EXPECT_NEAR(v.at(0), std::log(2.0) / 2, 1e-15);
}

TEST(TfIdfFit, UbiquitousTokenHasZeroIdf) {
    const auto m = TfIdfModel::fit(std::vector<TokenSequence>{{"a", "b"}, {"a"}});
    EXPECT_EQ(m.idf()[*m.index_of("a")], 0.0);
    const auto single = TfIdfModel::fit(std::vector<TokenSequence>{{"x", "y", "x"}});
    EXPECT_EQ(single.transform({"x", "y", "x"}).nnz(), 0u);
}

TEST(TfIdfFit, EmptyCorpus) {
    try {
        TfIdfModel::fit(std::vector<TokenSequence>{{}, {}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EmptyCorpus);
    }
}

TEST(TfIdfTransform, L2Normalize) {
    const auto m = TfIdfModel::fit(kHand);
    const auto v = m.transform(kHand[0], true);
    EXPECT_NEAR(v.squared_norm(), 1.0, 1e-12);
}

TEST(TfIdf, CountsAndRestriction) {
    const auto m = TfIdfModel::fit(std::vector<TokenSequence>{{"a", "b", "c"}, {"b", "c"}, {"c", "d"}});
    const auto c = m.counts({"c", "c", "a", "q"});
    EXPECT_EQ(c.at(*m.index_of("c")), 2.0);
    EXPECT_EQ(c.at(*m.index_of("a")), 1.0);
    EXPECT_EQ(c.nnz(), 2u);

    const auto r = m.restrict_top_by_df(2);
    EXPECT_EQ(r.tokens(), (std::vector<std::string>{"b", "c"}));
    EXPECT_EQ(r.n_docs(), 3u);
    EXPECT_EQ(r.idf(), (std::vector<double>{std::log(3.0 / 2), 0.0}));
    EXPECT_EQ(m.restrict_top_by_df(100).tokens(), m.tokens());

    const auto rebuilt = TfIdfModel::from_parts(m.tokens(), m.doc_freq(), m.n_docs());
    EXPECT_EQ(rebuilt.transform({"a", "d"}), m.transform({"a", "d"}));
}

TEST(TfIdfProperty, ValuesNonNegativeAndIndicesInRange) {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const auto docs = random_corpus(rng, 20, 15);
        bool any = false;
        for (const auto& d : docs) any = any || !d.empty();
        if (!any) continue;
        const auto m = TfIdfModel::fit(docs);
        for (std::size_t w = 0; w < m.dim(); ++w) {
            ASSERT_GE(m.doc_freq()[w], 1u);
            ASSERT_LE(m.doc_freq()[w], m.n_docs());
        }
        for (const auto& d : docs) {
            const auto v = m.transform(d);
            for (auto i : v.indices()) ASSERT_LT(i, m.dim());
            for (auto x : v.values()) ASSERT_GT(x, 0.0);
            // value is zero exactly when absent or idf is zero
            for (std::size_t w = 0; w < m.dim(); ++w) {
                const bool present = std::find(d.begin(), d.end(), m.tokens()[w]) != d.end();
                ASSERT_EQ(v.at(static_cast<SparseVector::Index>(w)) != 0.0, present && m.idf()[w] != 0.0);
            }
        }
    }
}

TEST(TfIdfProperty, RepeatingDocumentLeavesTfUnchanged) {
    Rng rng(6);
    const auto docs = random_corpus(rng, 30, 10);
    const auto m = TfIdfModel::fit(docs);
    for (const auto& d : docs) {
        for (int k = 2; k <= 4; ++k) {
            TokenSequence rep;
            for (int i = 0; i < k; ++i) rep.insert(rep.end(), d.begin(), d.end());
            const auto a = m.transform(d);
            const auto b = m.transform(rep);
            ASSERT_EQ(a.nnz(), b.nnz());
            for (std::size_t i = 0; i < a.nnz(); ++i) ASSERT_NEAR(a.values()[i], b.values()[i], 1e-12);
        }
    }
}
