#include <gtest/gtest.h>

#include "dill/classify.hpp"
#include "dill/oracles.hpp"
#include "dill/proptests.hpp"
#include "dill/rule_file.hpp"
#include "naive.hpp"

using namespace dill;
using naive::word;

namespace {

Cycle loop(std::size_t edge, std::size_t weight) { return Cycle{0, {edge}, weight}; }

std::vector<RuleTable> sampled_rules(std::uint64_t seed, std::size_t n)
{
    using Family = proptests::SamplerConfig::Family;
    std::vector<RuleTable> out;
    for (std::size_t i = 0; i < n; ++i) {
        proptests::SamplerConfig c{2, 1, 3, 1, 4, i % 3 == 0 ? Family::Random : i % 3 == 1 ? Family::Uniform : Family::Coboundary};
        out.push_back(proptests::RuleSampler(c, seed + i).next());
    }
    return out;
}

} // namespace

TEST(DeBruijn, EdgesAreWindows)
{
    DeBruijnGraph g(rules::diamond_example());
    EXPECT_EQ(g.node_count(), 2u);
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_EQ(g.source(2), 1u); // ba leaves b
    EXPECT_EQ(g.target(2), 0u); // and enters a
    EXPECT_EQ(g.weight(2), 3u);
    EXPECT_EQ(g.path_word(0, {1, 2}), word("aba"));
    EXPECT_EQ(g.path_weight({1, 2}), 4u);
    EXPECT_THROW(g.path_word(0, {2}), std::invalid_argument);
    EXPECT_EQ(g.connecting_path(0, 1), (std::vector<std::size_t>{1}));
}

TEST(CycleMeans, NamedRules)
{
    auto xor_means = cycle_means(rules::xor_ca());
    EXPECT_EQ(xor_means.min.mean(), Rational(1));
    EXPECT_EQ(xor_means.max.mean(), Rational(1));
    auto fib = cycle_means(rules::fibonacci());
    EXPECT_EQ(fib.min.mean(), Rational(1));
    EXPECT_EQ(fib.max.mean(), Rational(2));
    auto dia = cycle_means(rules::diamond_example());
    EXPECT_EQ(dia.min.mean(), Rational(2));
    EXPECT_EQ(dia.max.mean(), Rational(2));
    EXPECT_TRUE(dia.equal());
}

TEST(CycleMeans, KarpMatchesSimpleCycleEnumeration)
{
    for (const RuleTable& f : sampled_rules(41, 60)) {
        DeBruijnGraph g(f);
        auto [lo, hi] = oracles::simple_cycle_mean_range(g);
        auto means = cycle_means(f);
        EXPECT_EQ(means.min.mean(), lo) << format_rule(f);
        EXPECT_EQ(means.max.mean(), hi) << format_rule(f);
        EXPECT_EQ(g.path_weight(means.min.edges), means.min.weight);
    }
}

TEST(Constancy, Decisions)
{
    auto c = decide_constant(rules::constant_rule(Alphabet("abc"), 2, Word{2}));
    ASSERT_TRUE(std::holds_alternative<Constant>(c));
    EXPECT_EQ(std::get<Constant>(c).period, Word{2});

    // a^delta-image repeated with a different split is still constant.
    auto rot = RuleTable(Alphabet("ab"), 1, {word("ab"), word("abab")});
    EXPECT_TRUE(std::holds_alternative<Constant>(decide_constant(rot)));

    auto nc = decide_constant(rules::fibonacci());
    ASSERT_TRUE(std::holds_alternative<NotConstant>(nc));
    const auto& w = std::get<NotConstant>(nc);
    std::size_t p = w.position;
    EXPECT_NE(image_prefix(rules::fibonacci(), w.x(), p + 1)[p], image_prefix(rules::fibonacci(), w.y(), p + 1)[p]);
}

TEST(DiamondUniform, AgreesWithBruteForce)
{
    for (const RuleTable& f : sampled_rules(7, 60)) {
        bool fast = std::holds_alternative<DiamondUniform>(decide_diamond_uniform(f));
        bool slow = !oracles::diamond_counterexample(f, 7).has_value();
        EXPECT_EQ(fast, slow) << format_rule(f);
    }
    EXPECT_TRUE(oracles::diamond_counterexample(rules::fibonacci(), 2).has_value());
    EXPECT_FALSE(oracles::diamond_counterexample(rules::diamond_example(), 8).has_value());
}

TEST(Witness, ExplicitLoops)
{
    // Fibonacci: loop a weighs 2, loop b weighs 1.
    Witness fib = witness_pair(rules::fibonacci(), loop(0, 2), loop(1, 1));
    EXPECT_EQ(fib.u, word("a"));
    EXPECT_EQ(fib.v, word("b"));
    EXPECT_EQ(fib.alpha, 1);
    verify_witness(rules::fibonacci(), fib);

    Witness tau = witness_pair(rules::tau011(), loop(0, 1), loop(1, 2));
    EXPECT_EQ(tau.u, word("0", "01"));
    EXPECT_EQ(tau.v, word("1", "01"));
    EXPECT_EQ(tau.alpha, -1);
    EXPECT_EQ(tau.oriented().alpha, 1);
    EXPECT_EQ(tau.oriented().u, word("1", "01"));

    EXPECT_THROW(witness_pair(rules::diamond_example(), loop(0, 2), Cycle{1, {3}, 2}), std::invalid_argument);
    EXPECT_THROW(verify_witness(rules::fibonacci(), Witness{word("a"), word("a"), 1, 0}), std::invalid_argument);
}

TEST(Witness, FromDecisionChecks)
{
    for (const RuleTable& f : sampled_rules(99, 40)) {
        auto d = decide_diamond_uniform(f);
        if (auto* nd = std::get_if<NotDiamondUniform>(&d)) {
            Witness w = witness_pair(f, nd->low, nd->high);
            EXPECT_NO_THROW(verify_witness(f, w));
            EXPECT_EQ(w.u.size(), w.v.size());
            EXPECT_EQ(static_cast<std::int64_t>(image_length(f, w.u)) - static_cast<std::int64_t>(image_length(f, w.v)),
                      w.alpha);
        }
    }
}

TEST(Separating, BlockLayout)
{
    Witness w = witness_pair(rules::fibonacci(), loop(0, 2), loop(1, 1));
    auto x = periodic(Word{0});
    auto y = periodic(Word{1});
    auto [z, zz] = separating_configs(rules::fibonacci(), w, x, y);
    // u x[0,1) y[0,1) u x[0,2) y[0,2) ...
    EXPECT_EQ(z.prefix(9), word("aabaaabba"));
    EXPECT_EQ(zz.prefix(9), word("babbaabbb"));
    for (std::size_t j = 1; j < 6; ++j)
        EXPECT_EQ(separating_block_start(w, j), (j - 1) + (j - 1) * j);
    EXPECT_GE(separating_offset_bound(rules::fibonacci(), w, 8), separating_block_start(w, 18));

    // 0 -> 0, 1 -> 11 with u = 1, v = 0: z = 1 1 0 1 11 00 1 111 000 ...
    Witness t{word("1", "01"), word("0", "01"), 1, 0};
    auto [tz, tw] = separating_configs(rules::tau011(), t, periodic(Word{1}), periodic(Word{0}));
    EXPECT_EQ(tz.prefix(15), word("110111001111000", "01"));
    EXPECT_EQ(tw.prefix(15), word("010011000111000", "01"));
}

TEST(LengthDefect, BoundsAndSlack)
{
    EXPECT_EQ(length_defect_bound(rules::diamond_example()), Rational(2));
    EXPECT_EQ(length_defect_bound(rules::xor_ca()), Rational(0));
    EXPECT_THROW(length_defect_bound(rules::fibonacci()), std::invalid_argument);
    EXPECT_EQ(lipschitz_slack(rules::diamond_example(), Space::WeylL, 4), Rational(28, 4));
    EXPECT_EQ(lipschitz_slack(rules::xor_ca(), Space::WeylH, 3), Rational(6, 3));
    EXPECT_EQ(lipschitz_constant(rules::xor_ca(), Space::WeylH), Rational(2));
    EXPECT_EQ(lipschitz_constant(rules::diamond_example(), Space::WeylL), Rational(9));
    EXPECT_THROW(lipschitz_constant(rules::diamond_example(), Space::WeylH), std::invalid_argument);
    EXPECT_THROW(lipschitz_constant(rules::fibonacci(), Space::WeylL), std::invalid_argument);
}

TEST(LengthDefect, BruteForceNeverExceedsBound)
{
    RuleTable f = rules::diamond_example();
    Rational bound = length_defect_bound(f);
    for (std::size_t len = 2; len <= 8; ++len) {
        for (std::uint64_t i = 0; i < (1u << len); ++i) {
            for (std::uint64_t j = 0; j < (1u << len); ++j) {
                auto a = image_length(f, kernels::word_from_index(i, 2, len));
                auto b = image_length(f, kernels::word_from_index(j, 2, len));
                EXPECT_LE(Rational(static_cast<std::int64_t>(a > b ? a - b : b - a)), bound);
            }
        }
    }
}

TEST(DeltaNorms, UniformOnly)
{
    auto d = delta_norms(rules::xor_ca());
    EXPECT_EQ(d.mind, 0u); // aa and bb share an image
    EXPECT_EQ(d.maxd, 1u);
    EXPECT_THROW(delta_norms(rules::fibonacci()), std::invalid_argument);
}

TEST(Verdicts, NamedRules)
{
    EXPECT_TRUE(verdict_weyl_H(rules::xor_ca()).well_defined());
    EXPECT_TRUE(verdict_weyl_L(rules::xor_ca()).well_defined());

    Verdict fh = verdict_weyl_H(rules::fibonacci());
    ASSERT_TRUE(fh.not_well_defined());
    const auto& ev = std::get<NotWellDefined>(fh.outcome);
    ASSERT_TRUE(ev.periodic_separation.has_value());
    for (const auto& e : ev.evidence.image.entries)
        EXPECT_GE(e.value, ev.periodic_separation->image_lower_bound(e.window));
    EXPECT_LT(ev.evidence.input.final_value(), ev.evidence.image.final_value());

    Verdict fl = verdict_weyl_L(rules::fibonacci());
    ASSERT_TRUE(fl.not_well_defined());
    ASSERT_TRUE(std::get<NotWellDefined>(fl.outcome).witness.has_value());

    EXPECT_TRUE(verdict_weyl_H(rules::diamond_example()).not_well_defined());
    Verdict dl = verdict_weyl_L(rules::diamond_example());
    ASSERT_TRUE(dl.well_defined());
    EXPECT_EQ(std::get<WellDefined>(dl.outcome).reason, Reason::DiamondUniform);

    Verdict cst = verdict_weyl_H(RuleTable(Alphabet("ab"), 1, {word("ab"), word("abab")}));
    ASSERT_TRUE(cst.well_defined());
    EXPECT_EQ(std::get<WellDefined>(cst.outcome).reason, Reason::Constant);

    EXPECT_TRUE(verdict_weyl_H(rules::tau011()).not_well_defined());
    EXPECT_TRUE(verdict_weyl_L(rules::tau011()).not_well_defined());
    EXPECT_EQ(parse_space("hamming"), Space::WeylH);
    EXPECT_EQ(parse_space("L"), Space::WeylL);
    EXPECT_THROW(parse_space("cantor"), std::invalid_argument);
}

TEST(Lipschitz, XorAndDiamond)
{
    std::vector<ConfigPair> pairs{{periodic(Word{0, 1}), periodic(Word{1, 0})},
                                  {ramp({1, 0, 1, 0}), ramp({1, 1, 1, -1})}};
    auto h = lipschitz_check(rules::xor_ca(), pairs, {1, 4, 16, 64}, OffsetPolicy::proportional(4), Space::WeylH);
    EXPECT_EQ(h.violations, 0u);
    EXPECT_EQ(h.rows.size(), 8u);
    auto l = lipschitz_check(rules::diamond_example(), pairs, {1, 4, 16, 32}, OffsetPolicy::proportional(4),
                             Space::WeylL);
    EXPECT_EQ(l.violations, 0u);
    for (const auto& r : l.rows)
        EXPECT_EQ(r.margin, r.bound - r.image);

    // minf > 1 shortens the input window.
    auto tripled = RuleTable(Alphabet("ab"), 1, {word("aaa"), word("bbb")});
    auto t = lipschitz_check(tripled, pairs, {12}, OffsetPolicy::proportional(4), Space::WeylH);
    EXPECT_EQ(t.rows[0].input_window, 4u);
    EXPECT_EQ(t.rows[0].input_max_offset, 16u);
    EXPECT_EQ(t.violations, 0u);
}

TEST(Lemmas, NoViolationsOnNamedRules)
{
    for (const RuleTable& f : {rules::fibonacci(), rules::xor_ca(), rules::diamond_example()}) {
        auto r = lemma_lev_check(f, 6);
        EXPECT_EQ(r.violations, 0u);
        EXPECT_EQ(r.rows.size(), 6u);
    }
    std::vector<ConfigPair> pairs{{ramp({1, 0, 1, 0}), ramp({1, 1, 1, -1})}};
    auto h = lemma_lip_H_check(rules::xor_ca(), pairs, {4, 9, 32}, {0, 3, 17, 100});
    EXPECT_EQ(h.checks, 12u);
    EXPECT_EQ(h.lemma_violations, 0u);
    EXPECT_EQ(h.proposition_violations, 0u);
    EXPECT_THROW(lemma_lip_H_check(rules::fibonacci(), pairs, {4}, {0}), std::invalid_argument);
}

TEST(Lemmas, TauTightAtMaxf)
{
    // maxf = 2 and delta = 1: |f*(1)| - |f*(0)| = 1 meets the bound 2 * 1/2 - 1/2 exactly.
    auto r = lemma_lev_check(rules::tau011(), 4);
    EXPECT_EQ(r.violations, 0u);
    ASSERT_TRUE(r.tightest_doubled_margin.has_value());
    EXPECT_EQ(*r.tightest_doubled_margin, 0);
}
