#include <gtest/gtest.h>

#include "dill/words.hpp"
#include "naive.hpp"

using namespace dill;

TEST(Alphabet, EncodesAndDecodes)
{
    Alphabet a("ab");
    EXPECT_EQ(a.size(), 2u);
    EXPECT_EQ(a.encode("abba"), (Word{0, 1, 1, 0}));
    EXPECT_EQ(a.decode(Word{1, 0}), "ba");
    EXPECT_TRUE(a.contains('a'));
    EXPECT_FALSE(a.contains('c'));
}

TEST(Alphabet, RejectsBadInput)
{
    EXPECT_THROW(Alphabet(""), std::invalid_argument);
    EXPECT_THROW(Alphabet("aba"), std::invalid_argument);
    EXPECT_THROW(Alphabet("ab").encode("abc"), std::invalid_argument);
    EXPECT_THROW(Alphabet("ab").symbol(2), std::out_of_range);
}

TEST(Words, DeleteAt)
{
    EXPECT_EQ(delete_at(Word{0, 1, 2}, 1), (Word{0, 2}));
    EXPECT_EQ(delete_at(Word{0}, 0), Word{});
    EXPECT_THROW(delete_at(Word{0, 1}, 2), std::out_of_range);
    for (std::size_t n = 1; n < 8; ++n)
        for (std::size_t j = 0; j < n; ++j)
            EXPECT_EQ(delete_at(Word(n, 1), j).size(), n - 1);
}

TEST(Words, RepeatAndConcat)
{
    EXPECT_EQ(repeat(1, 3), (Word{1, 1, 1}));
    EXPECT_EQ(concat(Word{0}, Word{1, 1}), (Word{0, 1, 1}));
}

TEST(Configurations, Periodic)
{
    auto x = periodic(Word{0, 1});
    EXPECT_EQ(x.prefix(5), (Word{0, 1, 0, 1, 0}));
    EXPECT_EQ(x.describe(Alphabet("ab")), "periodic:ab");
    EXPECT_THROW(periodic(Word{}), std::invalid_argument);
}

TEST(Configurations, EventuallyPeriodic)
{
    auto x = eventually_periodic(Word{1, 1, 0}, Word{0, 1});
    EXPECT_EQ(x.prefix(7), (Word{1, 1, 0, 0, 1, 0, 1}));
    EXPECT_EQ(x.describe(Alphabet("ab")), "evp:bba|ab");
    EXPECT_EQ(explicit_config(Word{1}, 0).describe(Alphabet("ab")), "word:b!a");
}

TEST(Configurations, RampBlocks)
{
    // 0^n 1^n for n = 1, 2, 3: 01 0011 000111
    auto x = ramp({1, 0, 1, 0});
    EXPECT_EQ(x.prefix(12), naive::word("010011000111", "01"));
    // 0^(n+1) 1^(n-1): 00 0001 000011
    auto y = ramp({1, 1, 1, -1});
    EXPECT_EQ(y.prefix(12), naive::word("000001000011", "01"));
    Ramp r{1, 0, 1, 0};
    for (std::size_t j = 0; j < 20; ++j)
        EXPECT_EQ(r.block_start(j), j * (j + 1));
    EXPECT_THROW(ramp({0, -1, 1, 0}), std::invalid_argument);
    EXPECT_THROW(ramp({0, 0, 0, 0}), std::invalid_argument);
}

TEST(Configurations, ShiftComposes)
{
    auto x = eventually_periodic(Word{2, 2, 1}, Word{0, 1, 2});
    for (std::size_t s = 0; s < 6; ++s)
        for (std::size_t t = 0; t < 6; ++t)
            EXPECT_EQ(shift(shift(x, s), t).prefix(30), shift(x, s + t).prefix(30));
    EXPECT_EQ(shift(x, 0).prefix(10), x.prefix(10));
}

TEST(Configurations, PrefixConsistencyAcrossKinds)
{
    std::vector<ConfigGenerator> kinds{
        periodic(Word{0, 1, 1}),
        eventually_periodic(Word{1}, Word{0}),
        ramp({1, 0, 1, 0}),
        explicit_config(Word{1, 0}, 1),
        shift(ramp({2, 0, 1, 1}), 3),
        block_sequence([](std::size_t j) { return Word(j % 3, static_cast<Letter>(j % 2)); }, "blocks"),
    };
    for (const auto& x : kinds) {
        Word big = x.prefix(300);
        ASSERT_EQ(big.size(), 300u);
        for (std::size_t n : {0u, 1u, 7u, 64u, 299u})
            EXPECT_EQ(x.prefix(n), Word(big.begin(), big.begin() + static_cast<std::ptrdiff_t>(n)));
    }
}

TEST(Configurations, BlockSequenceGivesUpOnEmptyBlocks)
{
    auto x = block_sequence([](std::size_t j) { return j == 1 ? Word{0} : Word{}; }, "one letter");
    EXPECT_EQ(x.prefix(1), Word{0});
    EXPECT_THROW(x.prefix(2), std::runtime_error);
}
