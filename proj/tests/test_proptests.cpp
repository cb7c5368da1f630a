#include <gtest/gtest.h>

#include "dill/classify.hpp"
#include "dill/proptests.hpp"

using namespace dill;
using namespace dill::proptests;

TEST(Sampler, DeterministicPerSeed)
{
    SamplerConfig c;
    RuleSampler a(c, 17), b(c, 17), other(c, 18);
    bool differs = false;
    for (int i = 0; i < 20; ++i) {
        RuleTable x = a.next();
        EXPECT_EQ(x, b.next());
        differs = differs || !(x == other.next());
    }
    EXPECT_TRUE(differs);
}

TEST(Sampler, FamiliesHaveTheirShape)
{
    using Family = SamplerConfig::Family;
    RuleSampler uni({3, 1, 2, 1, 4, Family::Uniform}, 5);
    RuleSampler cob({2, 2, 3, 1, 3, Family::Coboundary}, 5);
    RuleSampler rnd({2, 1, 3, 2, 5, Family::Random}, 5);
    for (int i = 0; i < 30; ++i) {
        RuleTable u = uni.next();
        EXPECT_TRUE(norms(u).uniform());
        EXPECT_EQ(u.alphabet().symbols(), "abc");
        EXPECT_TRUE(std::holds_alternative<DiamondUniform>(decide_diamond_uniform(cob.next())));
        RuleTable r = rnd.next();
        EXPECT_GE(r.diameter(), 1u);
        EXPECT_LE(r.diameter(), 3u);
        EXPECT_GE(norms(r).minf, 2u);
        EXPECT_LE(norms(r).maxf, 5u);
    }
}

TEST(Shrink, DropsLettersWhileFailing)
{
    RuleTable big(Alphabet("ab"), 1, {Word{0, 1, 1, 0}, Word{1, 1, 1}});
    auto fails = [](const RuleTable& f) { return !norms(f).uniform(); };
    RuleTable small = shrink_rule(big, fails);
    EXPECT_TRUE(fails(small));
    EXPECT_EQ(norms(small).minf + norms(small).maxf, 3u);
}

TEST(Suites, PassWithDefaultSeed)
{
    for (const auto& name : suite_names()) {
        SuiteReport r = run_suite(name, 1, 20);
        EXPECT_TRUE(r.passed()) << r.text();
        EXPECT_FALSE(r.results.empty());
        EXPECT_NE(r.reproduce.find("--seed 1"), std::string::npos);
    }
    EXPECT_THROW(run_suite("nonsense", 1), std::invalid_argument);
}

TEST(Properties, ShiftAndDiamond)
{
    PropertyResult s = check_shift_commutation(3, 10, 64);
    EXPECT_TRUE(s.passed) << s.message;
    EXPECT_GT(s.cases, 0u);
    PropertyResult d = check_diamond_decisions(3, 15, 7);
    EXPECT_TRUE(d.passed) << d.message;
}
