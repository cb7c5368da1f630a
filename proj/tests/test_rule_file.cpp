#include <gtest/gtest.h>

#include <string>

#include "dill/rule_file.hpp"
#include "naive.hpp"

using namespace dill;

namespace {

std::size_t error_line(std::string_view text)
{
    try {
        parse_rule(text);
    } catch (const RuleParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "no parse error for:\n" << text;
    return 999;
}

const std::filesystem::path rules_dir = DILL_RULES_DIR;

} // namespace

TEST(RuleFile, ShippedFilesMatchBuiltIns)
{
    EXPECT_EQ(load_rule_file(rules_dir / "fibonacci.rule"), rules::fibonacci());
    EXPECT_EQ(load_rule_file(rules_dir / "xor.rule"), rules::xor_ca());
    EXPECT_EQ(load_rule_file(rules_dir / "diamond.rule"), rules::diamond_example());
    EXPECT_EQ(load_rule_file(rules_dir / "tau011.rule"), rules::tau011());
    EXPECT_EQ(load_rule_file(rules_dir / "shift.rule"), rules::shift(Alphabet("ab")));
    EXPECT_EQ(load_rule_file(rules_dir / "xor_fibonacci.rule"), rules::xor_then_fibonacci());
    EXPECT_THROW(load_rule_file(rules_dir / "missing.rule"), std::runtime_error);
}

TEST(RuleFile, RoundTrip)
{
    for (const RuleTable& f : {rules::fibonacci(), rules::diamond_example(), rules::tau011(),
                               rules::constant_rule(Alphabet("xyz"), 2, Word{2, 0})}) {
        EXPECT_EQ(parse_rule(format_rule(f)), f);
    }
    EXPECT_EQ(format_rule(rules::fibonacci()), "alphabet: ab\ndiameter: 1\na -> ab\nb -> a\n");
}

TEST(RuleFile, CommentsAndWhitespace)
{
    auto f = parse_rule("# header\n\n  alphabet: ab  \ndiameter:1\n  b -> a   # trailing\na->ab\n");
    EXPECT_EQ(f, rules::fibonacci());
}

TEST(RuleFile, ErrorsCarryLineNumbers)
{
    EXPECT_EQ(error_line("alphabet: ab\ndiameter: 1\na -> ab\na -> b\n"), 4u);
    EXPECT_EQ(error_line("alphabet: ab\ndiameter: 1\na -> ac\nb -> a\n"), 3u);
    EXPECT_EQ(error_line("alphabet: ab\ndiameter: 2\na -> a\n"), 3u);
    EXPECT_EQ(error_line("alphabet: ab\ndiameter: 1\na ->\n"), 3u);
    EXPECT_EQ(error_line("a -> b\n"), 1u);
    EXPECT_EQ(error_line("alphabet: ab\ndiameter: zero\n"), 2u);
    EXPECT_EQ(error_line("alphabet: ab\nalphabet: ab\n"), 2u);
    EXPECT_EQ(error_line("alphabet: ab\ndiameter: 1\nnonsense\n"), 3u);
    EXPECT_EQ(error_line("alphabet: ab\ndiameter: 1\na -> b\n"), 0u);
    EXPECT_EQ(error_line("diameter: 1\n"), 0u);
}

TEST(RuleFile, DigestIsStableAndDiscriminates)
{
    EXPECT_EQ(rule_digest(rules::fibonacci()), rule_digest(load_rule_file(rules_dir / "fibonacci.rule")));
    EXPECT_NE(rule_digest(rules::fibonacci()), rule_digest(rules::xor_then_fibonacci()));
    EXPECT_EQ(rule_digest(rules::xor_ca()).size(), 16u);
}

TEST(ConfigDsl, Kinds)
{
    Alphabet ab("ab");
    EXPECT_EQ(parse_config("periodic:ab", ab).prefix(5), naive::word("ababa"));
    EXPECT_EQ(parse_config("evp:bba|ab", ab).prefix(7), naive::word("bbaabab"));
    EXPECT_EQ(parse_config("word:b!a", ab).prefix(4), naive::word("baaa"));
    EXPECT_EQ(parse_config("ramp:1,0,1,0", Alphabet("01")).prefix(6), naive::word("010011", "01"));
    EXPECT_EQ(parse_config("evp:|b", ab).prefix(3), naive::word("bbb"));
}

TEST(ConfigDsl, Rejects)
{
    Alphabet ab("ab");
    for (const char* bad : {"ab", "periodic:", "evp:ab", "evp:a|", "word:ab", "word:a!ab", "ramp:1,2,3",
                            "ramp:1,x,1,0", "spiral:ab", "periodic:abc", "ramp:0,0,0,0"})
        EXPECT_THROW(parse_config(bad, ab), std::invalid_argument) << bad;
    EXPECT_THROW(parse_config("ramp:1,0,1,0", Alphabet("a")), std::invalid_argument);
}

TEST(ConfigDsl, InferAlphabet)
{
    EXPECT_EQ(infer_alphabet({"periodic:ba", "evp:c|a"}), "abc");
    EXPECT_EQ(infer_alphabet({"ramp:1,0,1,0"}), "01");
    EXPECT_EQ(infer_alphabet({"word:x!y", "periodic:x"}), "xy");
}
