#include <gtest/gtest.h>

#include "dill/dillmaps.hpp"
#include "naive.hpp"

using namespace dill;
using naive::word;

namespace {

// Window-by-window application written out longhand.
Word naive_star(const RuleTable& f, const Word& u)
{
    Word out;
    for (std::size_t k = 0; k + f.diameter() <= u.size(); ++k) {
        Word window(u.begin() + static_cast<std::ptrdiff_t>(k),
                    u.begin() + static_cast<std::ptrdiff_t>(k + f.diameter()));
        const Word& img = f.image(window);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

} // namespace

TEST(RuleTable, ValidatesTotalityAndImages)
{
    Alphabet ab("ab");
    EXPECT_THROW(RuleTable(ab, 1, {word("a")}), std::invalid_argument);
    EXPECT_THROW(RuleTable(ab, 1, {word("a"), Word{}}), std::invalid_argument);
    EXPECT_THROW(RuleTable(ab, 1, {word("a"), Word{2}}), std::invalid_argument);
    EXPECT_THROW(RuleTable(ab, 0, {}), std::invalid_argument);
    EXPECT_THROW(RuleTable(ab, 21, std::vector<Word>(1, word("a"))), std::invalid_argument);
}

TEST(RuleTable, WindowEncodingIsFirstLetterMajor)
{
    RuleTable f = rules::diamond_example();
    EXPECT_EQ(f.encode_window(word("ab")), 1u);
    EXPECT_EQ(f.encode_window(word("ba")), 2u);
    EXPECT_EQ(f.decode_window(3), word("bb"));
    EXPECT_EQ(f.image(word("ba")), word("bab"));
}

TEST(Norms, NamedRules)
{
    EXPECT_TRUE(norms(rules::xor_ca()).uniform());
    Norms fib = norms(rules::fibonacci());
    EXPECT_EQ(fib.minf, 1u);
    EXPECT_EQ(fib.maxf, 2u);
    Norms dia = norms(rules::diamond_example());
    EXPECT_EQ(dia.minf, 1u);
    EXPECT_EQ(dia.maxf, 3u);
}

TEST(ApplyStar, FrozenImages)
{
    EXPECT_EQ(apply_star(rules::xor_ca(), word("aabab")), word("abbb"));
    EXPECT_EQ(apply_star(rules::diamond_example(), word("aab")), word("aba"));
    EXPECT_EQ(apply_star(rules::fibonacci(), word("aba")), word("abaab"));
    EXPECT_EQ(apply_star(rules::xor_ca(), word("a")), Word{});
    EXPECT_EQ(image_length(rules::diamond_example(), word("abab")), 5u);
    EXPECT_THROW(apply_star(rules::xor_ca(), Word{0, 5}), std::invalid_argument);
}

TEST(ApplyStar, MatchesLonghand)
{
    for (const RuleTable& f : {rules::xor_ca(), rules::diamond_example(), rules::xor_then_fibonacci()}) {
        for (std::uint64_t i = 0; i < 256; ++i) {
            Word u;
            for (int b = 0; b < 8; ++b)
                u.push_back(static_cast<Letter>(i >> b & 1));
            EXPECT_EQ(apply_star(f, u), naive_star(f, u));
            EXPECT_EQ(image_length(f, u), naive_star(f, u).size());
        }
    }
}

TEST(ImagePrefix, ExactLengthAndConsistent)
{
    RuleTable f = rules::fibonacci();
    auto x = periodic(Word{0});
    EXPECT_EQ(image_prefix(f, x, 7), word("abababa"));
    auto fx = image(f, explicit_config(Word{1}, 0));
    EXPECT_EQ(fx.prefix(6), word("aababa"));
    EXPECT_EQ(fx.describe(f.alphabet()), "F(word:b!a)");
    for (std::size_t n = 0; n < 40; ++n)
        EXPECT_EQ(image_prefix(rules::diamond_example(), ramp({1, 0, 1, 0}), n).size(), n);
}

TEST(ShiftJump, CommutesWithShift)
{
    RuleTable f = rules::diamond_example();
    auto x = eventually_periodic(word("bab"), word("ab"));
    std::size_t s = shift_jump(f, x);
    EXPECT_EQ(s, 3u); // |f(ba)|
    Word lhs = image_prefix(f, shift(x, 1), 100);
    Word rhs = image_prefix(f, x, 100 + s);
    EXPECT_EQ(lhs, Word(rhs.begin() + static_cast<std::ptrdiff_t>(s), rhs.end()));
}

TEST(Compose, SubstitutionAfterXor)
{
    RuleTable g = compose_sub_ca(rules::fibonacci(), rules::xor_ca());
    EXPECT_EQ(g, rules::xor_then_fibonacci());
    EXPECT_EQ(g.image(word("aa")), word("ab"));
    EXPECT_EQ(g.image(word("bb")), word("ab"));
    EXPECT_EQ(g.image(word("ab")), word("a"));
    EXPECT_EQ(g.image(word("ba")), word("a"));
    EXPECT_THROW(compose_sub_ca(rules::xor_ca(), rules::xor_ca()), std::invalid_argument);
    EXPECT_THROW(compose_sub_ca(rules::fibonacci(), rules::diamond_example()), std::invalid_argument);
    EXPECT_THROW(compose_sub_ca(rules::tau011(), rules::xor_ca()), std::invalid_argument);
}

TEST(OverlapSplitting, Exhaustive)
{
    for (const RuleTable& f : {rules::xor_ca(), rules::diamond_example(), rules::fibonacci()}) {
        const std::size_t d = f.diameter();
        Word pad = repeat(0, d - 1);
        for (std::size_t len = d; len <= 6; ++len) {
            for (std::uint64_t i = 0; i < (1u << len); ++i) {
                Word u;
                for (std::size_t b = 0; b < len; ++b)
                    u.push_back(static_cast<Letter>(i >> b & 1));
                Word tail(u.end() - static_cast<std::ptrdiff_t>(d - 1), u.end());
                EXPECT_EQ(apply_star(f, concat(u, pad)), concat(apply_star(f, u), apply_star(f, concat(tail, pad))));
            }
        }
    }
}
