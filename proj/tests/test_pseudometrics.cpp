#include <gtest/gtest.h>

#include "dill/pseudometrics.hpp"
#include "naive.hpp"

using namespace dill;

namespace {

Rational as_rational(naive::Fraction f) { return Rational(f.num, f.den); }

} // namespace

TEST(Sliding, AlternatingPairFrozen)
{
    auto x = periodic(Word{0, 1});
    auto y = periodic(Word{1, 0});
    // Derived with naive::sliding, then frozen.
    EXPECT_EQ(sliding_estimate(Base::Levenshtein, x, y, 16, 64).value, Rational(1, 16));
    EXPECT_EQ(sliding_estimate(Base::Hamming, x, y, 16, 64).value, Rational(1));
    EXPECT_EQ(besicovitch_estimate(Base::Levenshtein, x, y, 16), Rational(1, 16));
}

TEST(Sliding, MatchesNaive)
{
    std::vector<std::pair<ConfigGenerator, ConfigGenerator>> pairs{
        {periodic(Word{0, 1}), periodic(Word{1, 0})},
        {ramp({1, 0, 1, 0}), ramp({1, 1, 1, -1})},
        {eventually_periodic(Word{1, 1, 0}, Word{0, 1, 1}), periodic(Word{0})},
        {explicit_config(Word{1, 0, 1}, 0), shift(ramp({2, 0, 1, 1}), 5)},
    };
    for (const auto& [x, y] : pairs) {
        for (std::size_t ell : {1u, 3u, 8u, 13u}) {
            for (std::size_t K : {0u, 5u, 40u}) {
                Word px = x.prefix(ell + K), py = y.prefix(ell + K);
                for (Base base : {Base::Hamming, Base::Levenshtein}) {
                    Rational want = as_rational(naive::sliding(base == Base::Levenshtein, px, py, ell, K));
                    SlidingEstimate got = sliding_estimate(base, x, y, ell, K);
                    EXPECT_EQ(got.value, want) << to_string(base) << " ell=" << ell << " K=" << K;
                    EXPECT_EQ(got.value, sliding_estimate_serial(base, x, y, ell, K).value);
                    EXPECT_EQ(got.argmax, sliding_estimate_serial(base, x, y, ell, K).argmax);
                    EXPECT_LE(got.argmax, K);
                }
            }
        }
    }
}

TEST(Sliding, LevenshteinNeverExceedsHamming)
{
    auto x = ramp({1, 0, 1, 0});
    auto y = eventually_periodic(Word{1}, Word{0, 0, 1});
    for (std::size_t ell = 1; ell <= 40; ell += 3)
        EXPECT_LE(sliding_estimate(Base::Levenshtein, x, y, ell, 2 * ell).value,
                  sliding_estimate(Base::Hamming, x, y, ell, 2 * ell).value);
}

TEST(Sliding, RejectsZeroWindow)
{
    EXPECT_THROW(sliding_estimate(Base::Hamming, periodic(Word{0}), periodic(Word{1}), 0, 4),
                 std::invalid_argument);
}

TEST(Ladder, RampPairHamming)
{
    auto x = ramp({1, 0, 1, 0});
    auto y = ramp({1, 1, 1, -1});
    LadderReport r = weyl_ladder(Base::Hamming, x, y, {8, 16, 32, 64});
    ASSERT_EQ(r.entries.size(), 4u);
    // floor(sqrt(ell))/ell: the two ramps differ only near block ends.
    std::vector<Rational> want{Rational(1, 4), Rational(1, 4), Rational(5, 32), Rational(1, 8)};
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(r.entries[i].value, want[i]);
        EXPECT_EQ(r.entries[i].max_offset, 4 * r.entries[i].window);
        // bound 2/(m+p+1) + 2/ell with m = p = 1
        EXPECT_LE(r.entries[i].value, Rational(2, 3) + Rational(2, static_cast<std::int64_t>(r.entries[i].window)));
    }
    EXPECT_TRUE(r.non_increasing());
    EXPECT_FALSE(r.strictly_decreasing());
    EXPECT_EQ(r.final_value(), Rational(1, 8));
}

TEST(Ladder, TsvAndValidation)
{
    auto x = periodic(Word{0, 1});
    auto y = periodic(Word{1, 0});
    LadderReport r = weyl_ladder(Base::Levenshtein, x, y, {4, 8}, OffsetPolicy::fixed(3));
    EXPECT_EQ(to_tsv(r), "ell\tK\tvalue_num\tvalue_den\n4\t3\t1\t4\n8\t3\t1\t8\n");
    EXPECT_TRUE(r.strictly_decreasing());
    EXPECT_THROW(weyl_ladder(Base::Hamming, x, y, {}), std::invalid_argument);
    EXPECT_THROW(weyl_ladder(Base::Hamming, x, y, {8, 4}), std::invalid_argument);
    EXPECT_THROW(weyl_ladder(Base::Hamming, x, y, {0, 4}), std::invalid_argument);
}

TEST(Policies, Describe)
{
    EXPECT_EQ(OffsetPolicy::proportional(4)(10), 40u);
    EXPECT_EQ(OffsetPolicy::fixed(7)(1000), 7u);
    auto p = OffsetPolicy::custom([](std::size_t l) { return l + 1; }, "ell+1");
    EXPECT_EQ(p(4), 5u);
    EXPECT_EQ(p.description(), "ell+1");
    EXPECT_EQ(parse_base("H"), Base::Hamming);
    EXPECT_EQ(parse_base("levenshtein"), Base::Levenshtein);
    EXPECT_THROW(parse_base("cantor"), std::invalid_argument);
}
