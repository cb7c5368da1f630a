#include <gtest/gtest.h>

#include <omp.h>
#include <random>

#include "dill/kernels.hpp"
#include "naive.hpp"

using namespace dill;

namespace {

Word random_word(std::mt19937_64& rng, std::size_t n, std::size_t k)
{
    std::uniform_int_distribution<int> d(0, static_cast<int>(k) - 1);
    Word w(n);
    for (auto& c : w)
        c = static_cast<Letter>(d(rng));
    return w;
}

class ThreadCount : public ::testing::TestWithParam<int> {
protected:
    void SetUp() override
    {
        saved_ = omp_get_max_threads();
        omp_set_num_threads(GetParam());
    }
    void TearDown() override { omp_set_num_threads(saved_); }

private:
    int saved_ = 1;
};

} // namespace

TEST_P(ThreadCount, WindowProfileMatchesSerial)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        Word x = random_word(rng, 400, 2 + trial % 2);
        Word y = random_word(rng, 400, 2 + trial % 2);
        for (Base base : {Base::Hamming, Base::Levenshtein})
            for (std::size_t window : {1u, 7u, 64u})
                EXPECT_EQ(kernels::window_profile(base, x, y, window, 300),
                          kernels::window_profile_serial(base, x, y, window, 300));
    }
}

TEST_P(ThreadCount, LemmaScanMatchesSerial)
{
    for (const RuleTable& f : {rules::fibonacci(), rules::diamond_example(), rules::xor_ca()}) {
        for (std::size_t len : {1u, 4u, 6u}) {
            auto a = kernels::lev_lemma_scan(f, len);
            auto b = kernels::lev_lemma_scan_serial(f, len);
            EXPECT_EQ(a.pairs, b.pairs);
            EXPECT_EQ(a.violations, b.violations);
            EXPECT_EQ(a.tightest_margin, b.tightest_margin);
            EXPECT_EQ(a.tightest_u, b.tightest_u);
            EXPECT_EQ(a.tightest_v, b.tightest_v);
            EXPECT_EQ(a.has_tightest, b.has_tightest);
        }
    }
}

INSTANTIATE_TEST_SUITE_P(Threads, ThreadCount, ::testing::Values(1, 2, 4, 7));

TEST(WindowProfile, MatchesNaive)
{
    Word x = naive::word("abbabaababbbaab");
    Word y = naive::word("babbaabbbaababa");
    auto h = kernels::window_profile_serial(Base::Hamming, x, y, 5, 10);
    auto l = kernels::window_profile_serial(Base::Levenshtein, x, y, 5, 10);
    ASSERT_EQ(h.size(), 11u);
    for (std::size_t k = 0; k <= 10; ++k) {
        Word a(x.begin() + static_cast<std::ptrdiff_t>(k), x.begin() + static_cast<std::ptrdiff_t>(k + 5));
        Word b(y.begin() + static_cast<std::ptrdiff_t>(k), y.begin() + static_cast<std::ptrdiff_t>(k + 5));
        EXPECT_EQ(h[k], 2 * naive::hamming(a, b));
        EXPECT_EQ(l[k], naive::min_deletions(a, b));
    }
}

TEST(LemmaScan, PairCountAndNoViolations)
{
    auto scan = kernels::lev_lemma_scan(rules::fibonacci(), 5);
    EXPECT_EQ(scan.pairs, 32u * 32u);
    EXPECT_EQ(scan.violations, 0u);
    EXPECT_TRUE(scan.has_tightest);
    EXPECT_GE(scan.tightest_margin, 0);
    auto single = kernels::lev_lemma_scan(rules::identity_substitution(Alphabet("a")), 3);
    EXPECT_FALSE(single.has_tightest);
}

TEST(WordFromIndex, BaseEncoding)
{
    EXPECT_EQ(kernels::word_from_index(5, 2, 4), naive::word("abab"));
    EXPECT_EQ(kernels::word_from_index(0, 3, 2), naive::word("aa"));
    EXPECT_EQ(kernels::word_from_index(8, 3, 2), naive::word("cc", "abc"));
}
