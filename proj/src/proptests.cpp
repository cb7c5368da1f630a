#include "dill/proptests.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dill/classify.hpp"
#include "dill/distances.hpp"
#include "dill/oracles.hpp"
#include "dill/pseudometrics.hpp"
#include "dill/rule_file.hpp"

namespace dill::proptests {

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

namespace {

std::size_t uniform_int(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Alphabet letters(std::size_t n)
{
    std::string s;
    for (std::size_t i = 0; i < n; ++i)
        s.push_back(static_cast<char>('a' + i));
    return Alphabet(s);
}

Word random_word(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t length)
{
    Word w(length);
    for (auto& c : w)
        c = static_cast<Letter>(uniform_int(rng, 0, alphabet_size - 1));
    return w;
}

ConfigGenerator random_config(std::mt19937_64& rng, std::size_t alphabet_size)
{
    Word prefix = random_word(rng, alphabet_size, uniform_int(rng, 0, 8));
    Word period = random_word(rng, alphabet_size, uniform_int(rng, 1, 6));
    return eventually_periodic(std::move(prefix), std::move(period));
}

} // namespace

RuleSampler::RuleSampler(SamplerConfig config, std::uint64_t seed) : config_(config), rng_(seed)
{
    if (config_.alphabet_size == 0 || config_.min_diameter == 0 || config_.min_diameter > config_.max_diameter ||
        config_.min_image == 0 || config_.min_image > config_.max_image)
        throw std::invalid_argument("invalid sampler configuration");
}

RuleTable RuleSampler::next()
{
    const std::size_t a = config_.alphabet_size;
    const std::size_t delta = uniform_int(rng_, config_.min_diameter, config_.max_diameter);
    std::size_t windows = 1;
    for (std::size_t i = 0; i < delta; ++i)
        windows *= a;

    std::vector<std::size_t> lengths(windows);
    switch (config_.family) {
    case SamplerConfig::Family::Random:
        for (auto& l : lengths)
            l = uniform_int(rng_, config_.min_image, config_.max_image);
        break;
    case SamplerConfig::Family::Uniform: {
        std::size_t l = uniform_int(rng_, config_.min_image, config_.max_image);
        std::fill(lengths.begin(), lengths.end(), l);
        break;
    }
    case SamplerConfig::Family::Coboundary: {
        const std::size_t spread = (config_.max_image - config_.min_image) / 2;
        const std::size_t nodes = windows / a;
        std::vector<std::size_t> phi(nodes);
        for (auto& p : phi)
            p = uniform_int(rng_, 0, spread);
        for (std::size_t w = 0; w < windows; ++w)
            lengths[w] = config_.min_image + spread + phi[w % nodes] - phi[w / a];
        break;
    }
    }

    std::vector<Word> images;
    images.reserve(windows);
    for (std::size_t l : lengths)
        images.push_back(random_word(rng_, a, l));
    return RuleTable(letters(a), delta, std::move(images));
}

// ---------------------------------------------------------------------------
// Reporting
// ---------------------------------------------------------------------------

bool SuiteReport::passed() const
{
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.passed; });
}

std::string SuiteReport::text() const
{
    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << suite << "/" << r.name << " (" << r.cases << " cases)\n";
        if (!r.passed) {
            out << "  " << r.message << "\n";
            out << "  reproduce: " << reproduce << "\n";
        }
    }
    return out.str();
}

RuleTable shrink_rule(const RuleTable& f, const std::function<bool(const RuleTable&)>& fails)
{
    RuleTable current = f;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t w = 0; w < current.window_count(); ++w) {
            if (current.image(w).size() <= 1)
                continue;
            std::vector<Word> images = current.images();
            images[w].pop_back();
            RuleTable candidate(current.alphabet(), current.diameter(), std::move(images));
            bool still_fails = false;
            try {
                still_fails = fails(candidate);
            } catch (const std::exception&) {
                still_fails = true;
            }
            if (still_fails) {
                current = std::move(candidate);
                progress = true;
            }
        }
    }
    return current;
}

namespace {

struct Property {
    std::string name;
    std::function<PropertyResult(std::mt19937_64&)> run;
};

// Collects the first failure of a property.
class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    bool check(bool ok, const std::function<std::string()>& describe)
    {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.message = describe();
        }
        return ok;
    }

    // Like check, but for a failure tied to a rule: the message carries the shrunk table.
    bool check_rule(bool ok, const RuleTable& f, const std::function<bool(const RuleTable&)>& fails,
                    const std::string& what)
    {
        return check(ok, [&] { return what + "; shrunk rule:\n" + format_rule(shrink_rule(f, fails)); });
    }

    bool failed() const { return !result_.passed; }
    PropertyResult take() { return std::move(result_); }

private:
    PropertyResult result_;
};

std::string show(const Alphabet& a, WordView w) { return "'" + a.decode(w) + "'"; }

SuiteReport run_properties(const std::string& suite, std::uint64_t seed, std::string reproduce,
                           const std::vector<Property>& properties)
{
    SuiteReport report;
    report.suite = suite;
    report.seed = seed;
    report.reproduce = std::move(reproduce);
    report.results.resize(properties.size());
    const auto n = static_cast<std::int64_t>(properties.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& p = properties[static_cast<std::size_t>(i)];
        std::seed_seq seq{seed, static_cast<std::uint64_t>(i)};
        std::mt19937_64 rng(seq);
        try {
            report.results[static_cast<std::size_t>(i)] = p.run(rng);
        } catch (const std::exception& e) {
            report.results[static_cast<std::size_t>(i)] = {p.name, false, 0, std::string("exception: ") + e.what()};
        }
    }
    return report;
}

std::string verify_command(const std::string& suite, std::uint64_t seed, std::string extra = "")
{
    return "dill verify --suite " + suite + " --seed " + std::to_string(seed) + extra;
}

// All binary words of length 0..max_length.
std::vector<Word> all_binary_words(std::size_t max_length)
{
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_length; ++len)
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << len); ++i)
            out.push_back(kernels::word_from_index(i, 2, len));
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// distances
// ---------------------------------------------------------------------------

SuiteReport suite_distances(std::uint64_t seed)
{
    const Alphabet ab("ab");
    std::vector<Property> props;

    props.push_back({"levenshtein_matches_deletion_oracle", [&](std::mt19937_64&) {
                         Recorder r("levenshtein_matches_deletion_oracle");
                         auto words = all_binary_words(6);
                         for (const auto& u : words)
                             for (const auto& v : words)
                                 r.check(levenshtein(u, v) == levenshtein_oracle(u, v), [&] {
                                     return "d_L(" + show(ab, u) + "," + show(ab, v) + ") differs from the oracle";
                                 });
                         return r.take();
                     }});

    props.push_back({"metric_axioms_exhaustive", [&](std::mt19937_64&) {
                         Recorder r("metric_axioms_exhaustive");
                         auto words = all_binary_words(4);
                         for (const auto& u : words) {
                             for (const auto& v : words) {
                                 HalfInt uv = levenshtein(u, v);
                                 r.check(uv == levenshtein(v, u), [&] { return "asymmetric at " + show(ab, u); });
                                 r.check((uv == HalfInt{}) == (u == v),
                                         [&] { return "identity fails at " + show(ab, u) + "," + show(ab, v); });
                                 for (const auto& w : words)
                                     r.check(levenshtein(u, w) <= uv + levenshtein(v, w), [&] {
                                         return "triangle fails at " + show(ab, u) + "," + show(ab, v) + "," +
                                                show(ab, w);
                                     });
                             }
                         }
                         return r.take();
                     }});

    props.push_back({"levenshtein_bounds", [&](std::mt19937_64&) {
                         Recorder r("levenshtein_bounds");
                         auto words = all_binary_words(6);
                         for (const auto& u : words) {
                             for (const auto& v : words) {
                                 HalfInt d = levenshtein(u, v);
                                 std::uint64_t gap = u.size() > v.size() ? u.size() - v.size() : v.size() - u.size();
                                 r.check(d.doubled() >= gap, [&] {
                                     return "d_L below half the length gap at " + show(ab, u) + "," + show(ab, v);
                                 });
                                 if (u.size() != v.size())
                                     continue;
                                 r.check(d <= HalfInt::from_integer(static_cast<std::int64_t>(hamming(u, v))), [&] {
                                     return "d_L > d_H at " + show(ab, u) + "," + show(ab, v);
                                 });
                                 r.check(d <= HalfInt::from_integer(static_cast<std::int64_t>(u.size())),
                                         [&] { return "d_L > length at " + show(ab, u) + "," + show(ab, v); });
                             }
                         }
                         return r.take();
                     }});

    props.push_back({"random_identity", [](std::mt19937_64& rng) {
                         Recorder r("random_identity");
                         for (int i = 0; i < 10000; ++i) {
                             Word u = random_word(rng, 3, uniform_int(rng, 0, 24));
                             r.check(levenshtein(u, u) == HalfInt{}, [&] { return "d_L(u,u) != 0"; });
                         }
                         return r.take();
                     }});

    props.push_back({"random_triangle", [](std::mt19937_64& rng) {
                         Recorder r("random_triangle");
                         const Alphabet abc("abc");
                         for (int i = 0; i < 10000; ++i) {
                             Word u = random_word(rng, 3, uniform_int(rng, 0, 20));
                             Word v = random_word(rng, 3, uniform_int(rng, 0, 20));
                             Word w = random_word(rng, 3, uniform_int(rng, 0, 20));
                             r.check(levenshtein(u, w) <= levenshtein(u, v) + levenshtein(v, w), [&] {
                                 return "triangle fails at " + show(abc, u) + "," + show(abc, v) + "," + show(abc, w);
                             });
                         }
                         return r.take();
                     }});

    return run_properties("distances", seed, verify_command("distances", seed), props);
}

// ---------------------------------------------------------------------------
// dillmaps
// ---------------------------------------------------------------------------

PropertyResult check_shift_commutation(std::uint64_t seed, std::size_t n_rules, std::size_t max_n)
{
    Recorder r("shift_commutation");
    RuleSampler sampler({2, 1, 3, 1, 3, SamplerConfig::Family::Random}, seed);
    std::mt19937_64 rng(seed ^ 0x5bd1e995u);
    for (std::size_t i = 0; i < n_rules && !r.failed(); ++i) {
        RuleTable f = sampler.next();
        for (int c = 0; c < 3; ++c) {
            ConfigGenerator x = random_config(rng, 2);
            const std::size_t s = shift_jump(f, x);
            Word shifted = image_prefix(f, shift(x, 1), max_n);
            Word reference = image_prefix(f, x, max_n + s);
            for (std::size_t n = 0; n <= max_n; ++n) {
                bool ok = std::equal(shifted.begin(), shifted.begin() + static_cast<std::ptrdiff_t>(n),
                                     reference.begin() + static_cast<std::ptrdiff_t>(s));
                auto fails = [&](const RuleTable& g) {
                    std::size_t sg = shift_jump(g, x);
                    return image_prefix(g, shift(x, 1), n) != Word(image_prefix(g, x, n + sg).begin() +
                                                                   static_cast<std::ptrdiff_t>(sg),
                                                               image_prefix(g, x, n + sg).end());
                };
                if (!r.check_rule(ok, f, fails, "F(shift x) != shift^s F(x) for x = " + x.describe(f.alphabet()) +
                                                    ", n = " + std::to_string(n)))
                    break;
            }
        }
    }
    return r.take();
}

SuiteReport suite_dillmaps(std::uint64_t seed)
{
    std::vector<Property> props;

    props.push_back({"generator_prefix_consistency", [](std::mt19937_64& rng) {
                         Recorder r("generator_prefix_consistency");
                         const Alphabet ab("ab");
                         RuleSampler sampler({2, 1, 2, 1, 3, SamplerConfig::Family::Random}, rng());
                         for (int i = 0; i < 200; ++i) {
                             std::vector<ConfigGenerator> kinds{
                                 random_config(rng, 2),
                                 periodic(random_word(rng, 2, uniform_int(rng, 1, 5))),
                                 explicit_config(random_word(rng, 2, uniform_int(rng, 0, 6)),
                                                 static_cast<Letter>(uniform_int(rng, 0, 1))),
                                 ramp({1, static_cast<long>(uniform_int(rng, 0, 2)), 1, 0}),
                                 shift(random_config(rng, 2), uniform_int(rng, 0, 9)),
                                 image(sampler.next(), random_config(rng, 2)),
                             };
                             std::size_t n = uniform_int(rng, 0, 150);
                             std::size_t m = uniform_int(rng, n, 200);
                             for (const auto& x : kinds) {
                                 Word long_prefix = x.prefix(m);
                                 r.check(long_prefix.size() == m && x.prefix(n) == Word(long_prefix.begin(),
                                                                                        long_prefix.begin() +
                                                                                            static_cast<std::ptrdiff_t>(n)),
                                         [&] { return "prefix inconsistency for " + x.describe(ab); });
                             }
                         }
                         return r.take();
                     }});

    props.push_back({"shift_composition", [](std::mt19937_64& rng) {
                         Recorder r("shift_composition");
                         for (int i = 0; i < 500; ++i) {
                             ConfigGenerator x = random_config(rng, 3);
                             std::size_t s = uniform_int(rng, 0, 20), t = uniform_int(rng, 0, 20);
                             r.check(shift(shift(x, s), t).prefix(64) == shift(x, s + t).prefix(64),
                                     [&] { return "shift(shift(x,s),t) != shift(x,s+t)"; });
                         }
                         return r.take();
                     }});

    props.push_back({"delete_at_length", [](std::mt19937_64& rng) {
                         Recorder r("delete_at_length");
                         for (int i = 0; i < 2000; ++i) {
                             Word u = random_word(rng, 3, uniform_int(rng, 1, 30));
                             std::size_t j = uniform_int(rng, 0, u.size() - 1);
                             r.check(delete_at(u, j).size() == u.size() - 1, [] { return "|delete_at(u,j)| != |u|-1"; });
                         }
                         return r.take();
                     }});

    props.push_back({"length_bookkeeping", [](std::mt19937_64& rng) {
                         Recorder r("length_bookkeeping");
                         RuleSampler sampler({2, 1, 3, 1, 4, SamplerConfig::Family::Random}, rng());
                         for (int i = 0; i < 200 && !r.failed(); ++i) {
                             RuleTable f = sampler.next();
                             Norms n = norms(f);
                             const std::size_t delta = f.diameter();
                             Word u = random_word(rng, 2, uniform_int(rng, 0, 30));
                             std::size_t total = 0;
                             for (std::size_t k = 0; k + delta <= u.size(); ++k)
                                 total += f.image(WordView(u).subspan(k, delta)).size();
                             std::size_t len = apply_star(f, u).size();
                             auto fails = [&](const RuleTable& g) {
                                 std::size_t t = 0;
                                 for (std::size_t k = 0; k + g.diameter() <= u.size(); ++k)
                                     t += g.image(WordView(u).subspan(k, g.diameter())).size();
                                 return apply_star(g, u).size() != t || image_length(g, u) != t;
                             };
                             r.check_rule(len == total && image_length(f, u) == total, f, fails,
                                          "|f*(u)| is not the sum of window image lengths");
                             if (u.size() >= delta) {
                                 std::size_t windows = u.size() - delta + 1;
                                 r.check(n.minf * windows <= len && len <= n.maxf * windows,
                                         [] { return "|f*(u)| outside [minf, maxf] * windows"; });
                                 if (n.uniform())
                                     r.check(len == n.minf * windows, [] { return "uniform length identity fails"; });
                             }
                         }
                         return r.take();
                     }});

    props.push_back({"prefix_monotonicity", [](std::mt19937_64& rng) {
                         Recorder r("prefix_monotonicity");
                         RuleSampler sampler({2, 1, 3, 1, 3, SamplerConfig::Family::Random}, rng());
                         for (int i = 0; i < 200; ++i) {
                             RuleTable f = sampler.next();
                             ConfigGenerator x = random_config(rng, 2);
                             std::size_t m = uniform_int(rng, f.diameter(), 60);
                             std::size_t n = uniform_int(rng, f.diameter(), m);
                             Word shorter = apply_star(f, x.prefix(n));
                             Word longer = apply_star(f, x.prefix(m));
                             r.check(std::equal(shorter.begin(), shorter.end(), longer.begin()),
                                     [] { return "f*(x[0,n)) is not a prefix of f*(x[0,m))"; });
                             Word img = image_prefix(f, x, longer.size());
                             r.check(img == longer, [] { return "image_prefix disagrees with f* of a prefix"; });
                         }
                         return r.take();
                     }});

    props.push_back({"overlap_splitting", [](std::mt19937_64& rng) {
                         Recorder r("overlap_splitting");
                         for (std::size_t delta = 1; delta <= 3; ++delta) {
                             RuleSampler sampler({2, delta, delta, 1, 3, SamplerConfig::Family::Random}, rng());
                             for (int k = 0; k < 5; ++k) {
                                 RuleTable f = sampler.next();
                                 Word pad = repeat(0, delta - 1);
                                 for (const Word& u : all_binary_words(6)) {
                                     if (u.size() < delta)
                                         continue;
                                     Word lhs = apply_star(f, concat(u, pad));
                                     Word tail = Word(u.end() - static_cast<std::ptrdiff_t>(delta - 1), u.end());
                                     Word rhs = concat(apply_star(f, u), apply_star(f, concat(tail, pad)));
                                     r.check(lhs == rhs, [] { return "f*(u a^(d-1)) != f*(u) f*(suffix a^(d-1))"; });
                                 }
                             }
                         }
                         return r.take();
                     }});

    props.push_back({"shift_commutation",
                     [](std::mt19937_64& rng) { return check_shift_commutation(rng(), 50, 512); }});

    props.push_back({"substitution_after_xor", [](std::mt19937_64&) {
                         Recorder r("substitution_after_xor");
                         r.check(compose_sub_ca(rules::fibonacci(), rules::xor_ca()) == rules::xor_then_fibonacci(),
                                 [] { return "composed table differs from the expected one"; });
                         return r.take();
                     }});

    return run_properties("dillmaps", seed, verify_command("dillmaps", seed), props);
}

// ---------------------------------------------------------------------------
// pseudometrics
// ---------------------------------------------------------------------------

SuiteReport suite_pseudometrics(std::uint64_t seed)
{
    std::vector<Property> props;

    props.push_back({"estimate_relations", [](std::mt19937_64& rng) {
                         Recorder r("estimate_relations");
                         for (int i = 0; i < 300; ++i) {
                             const std::size_t a = uniform_int(rng, 2, 3);
                             ConfigGenerator x = random_config(rng, a), y = random_config(rng, a);
                             std::size_t ell = uniform_int(rng, 1, 40), k = uniform_int(rng, 0, 80);
                             Rational h = sliding_estimate(Base::Hamming, x, y, ell, k).value;
                             Rational l = sliding_estimate(Base::Levenshtein, x, y, ell, k).value;
                             r.check(besicovitch_estimate(Base::Hamming, x, y, ell) <= h,
                                     [] { return "prefix-anchored estimate exceeds the sliding one"; });
                             r.check(besicovitch_estimate(Base::Levenshtein, x, y, ell) <= l,
                                     [] { return "prefix-anchored L estimate exceeds the sliding one"; });
                             r.check(l <= h, [] { return "L estimate exceeds H estimate"; });
                             r.check(h == sliding_estimate(Base::Hamming, y, x, ell, k).value &&
                                         l == sliding_estimate(Base::Levenshtein, y, x, ell, k).value,
                                     [] { return "estimate is not symmetric"; });
                             r.check(Rational(0) <= l && h <= Rational(1), [] { return "estimate outside [0,1]"; });
                         }
                         return r.take();
                     }});

    props.push_back({"triangle_at_fixed_budget", [](std::mt19937_64& rng) {
                         Recorder r("triangle_at_fixed_budget");
                         for (int i = 0; i < 300; ++i) {
                             ConfigGenerator x = random_config(rng, 2), y = random_config(rng, 2),
                                             z = random_config(rng, 2);
                             std::size_t ell = uniform_int(rng, 1, 32), k = uniform_int(rng, 0, 64);
                             for (Base base : {Base::Hamming, Base::Levenshtein}) {
                                 r.check(sliding_estimate(base, x, z, ell, k).value <=
                                             sliding_estimate(base, x, y, ell, k).value +
                                                 sliding_estimate(base, y, z, ell, k).value,
                                         [&] { return std::string("triangle fails for ") + std::string(to_string(base)); });
                             }
                         }
                         return r.take();
                     }});

    props.push_back({"parallel_matches_serial", [](std::mt19937_64& rng) {
                         Recorder r("parallel_matches_serial");
                         for (int i = 0; i < 100; ++i) {
                             ConfigGenerator x = random_config(rng, 3), y = random_config(rng, 3);
                             std::size_t ell = uniform_int(rng, 1, 48), k = uniform_int(rng, 0, 200);
                             for (Base base : {Base::Hamming, Base::Levenshtein}) {
                                 auto p = sliding_estimate(base, x, y, ell, k);
                                 auto s = sliding_estimate_serial(base, x, y, ell, k);
                                 r.check(p.value == s.value && p.argmax == s.argmax,
                                         [] { return "parallel estimate differs from the serial one"; });
                             }
                         }
                         return r.take();
                     }});

    return run_properties("pseudometrics", seed, verify_command("pseudometrics", seed), props);
}

// ---------------------------------------------------------------------------
// theorems
// ---------------------------------------------------------------------------

namespace {

RuleTable theorem_rule(std::uint64_t seed, std::size_t index)
{
    static constexpr SamplerConfig::Family families[] = {
        SamplerConfig::Family::Random, SamplerConfig::Family::Uniform, SamplerConfig::Family::Coboundary};
    SamplerConfig config{2, 1, 3, 1, 4, families[index % 3]};
    std::seed_seq seq{seed, static_cast<std::uint64_t>(index)};
    std::mt19937_64 rng(seq);
    return RuleSampler(config, rng()).next();
}

bool diamond_disagrees(const RuleTable& g, std::size_t max_length)
{
    bool decided = std::holds_alternative<DiamondUniform>(decide_diamond_uniform(g));
    return decided != !oracles::diamond_counterexample(g, max_length).has_value();
}

std::vector<ConfigPair> random_pairs(std::mt19937_64& rng, std::size_t count)
{
    std::vector<ConfigPair> out;
    for (std::size_t i = 0; i < count; ++i) {
        // Same period, prefixes of equal length: pairs that are close in the long run.
        Word period = random_word(rng, 2, uniform_int(rng, 1, 5));
        std::size_t len = uniform_int(rng, 0, 8);
        out.emplace_back(eventually_periodic(random_word(rng, 2, len), period),
                         i % 2 ? random_config(rng, 2) : eventually_periodic(random_word(rng, 2, len), period));
    }
    return out;
}

} // namespace

PropertyResult check_diamond_decisions(std::uint64_t seed, std::size_t n_rules, std::size_t max_length)
{
    Recorder r("diamond_decision_vs_brute_force");
    for (std::size_t i = 0; i < n_rules; ++i) {
        RuleTable f = theorem_rule(seed, i);
        auto decision = decide_diamond_uniform(f);
        auto counterexample = oracles::diamond_counterexample(f, max_length);
        r.check_rule(std::holds_alternative<DiamondUniform>(decision) == !counterexample.has_value(), f,
                     [&](const RuleTable& g) { return diamond_disagrees(g, max_length); },
                     "rule " + std::to_string(i) + ": cycle-mean decision disagrees with brute force");
        if (const auto* nd = std::get_if<NotDiamondUniform>(&decision)) {
            Witness w = witness_pair(f, nd->low, nd->high);
            auto direct =
                static_cast<std::int64_t>(apply_star(f, w.u).size()) - static_cast<std::int64_t>(apply_star(f, w.v).size());
            r.check(direct == w.alpha && w.alpha != 0, [&] {
                return "rule " + std::to_string(i) + ": witness length defect does not re-evaluate";
            });
        }
    }
    return r.take();
}

SuiteReport suite_theorems(std::uint64_t seed, std::size_t n_rules)
{
    std::vector<Property> props;

    props.push_back({"diamond_decision_vs_brute_force",
                     [seed, n_rules](std::mt19937_64&) { return check_diamond_decisions(seed, n_rules, 10); }});

    props.push_back({"cycle_means_vs_enumeration", [seed, n_rules](std::mt19937_64&) {
                         Recorder r("cycle_means_vs_enumeration");
                         for (std::size_t i = 0; i < n_rules; ++i) {
                             RuleTable f = theorem_rule(seed, i);
                             DeBruijnGraph g(f);
                             if (g.node_count() > 4)
                                 continue;
                             auto [lo, hi] = oracles::simple_cycle_mean_range(g);
                             CycleMeans m = cycle_means(f);
                             auto fails = [](const RuleTable& h) {
                                 auto [l, u] = oracles::simple_cycle_mean_range(DeBruijnGraph(h));
                                 CycleMeans c = cycle_means(h);
                                 return c.min.mean() != l || c.max.mean() != u;
                             };
                             r.check_rule(m.min.mean() == lo && m.max.mean() == hi, f, fails,
                                          "rule " + std::to_string(i) + ": mean cycle differs from enumeration");
                         }
                         return r.take();
                     }});

    props.push_back({"uniform_rules_are_diamond_uniform", [seed, n_rules](std::mt19937_64&) {
                         Recorder r("uniform_rules_are_diamond_uniform");
                         for (std::size_t i = 0; i < n_rules; ++i) {
                             RuleTable f = theorem_rule(seed, i);
                             Norms n = norms(f);
                             if (!n.uniform())
                                 continue;
                             auto d = decide_diamond_uniform(f);
                             const auto* du = std::get_if<DiamondUniform>(&d);
                             r.check(du && du->mean == Rational(static_cast<std::int64_t>(n.minf)),
                                     [&] { return "uniform rule " + std::to_string(i) + " not DiamondUniform(minf)"; });
                         }
                         return r.take();
                     }});

    props.push_back({"path_weight_identity", [seed, n_rules](std::mt19937_64& rng) {
                         Recorder r("path_weight_identity");
                         for (std::size_t i = 0; i < n_rules; ++i) {
                             RuleTable f = theorem_rule(seed, i);
                             DeBruijnGraph g(f);
                             Word u = random_word(rng, 2, f.diameter() - 1 + uniform_int(rng, 0, 20));
                             std::vector<std::size_t> edges;
                             for (std::size_t k = 0; k + f.diameter() <= u.size(); ++k)
                                 edges.push_back(f.encode_window(WordView(u).subspan(k, f.diameter())));
                             std::size_t start = 0;
                             for (std::size_t k = 0; k + 1 < f.diameter(); ++k)
                                 start = start * 2 + u[k];
                             r.check(g.path_weight(edges) == image_length(f, u) && g.path_word(start, edges) == u,
                                     [&] { return "path weight differs from |f*(u)| for rule " + std::to_string(i); });
                         }
                         return r.take();
                     }});

    props.push_back({"weyl_h_separation_evidence", [seed, n_rules](std::mt19937_64&) {
                         Recorder r("weyl_h_separation_evidence");
                         for (std::size_t i = 0; i < n_rules; ++i) {
                             RuleTable f = theorem_rule(seed, i);
                             if (norms(f).uniform() || std::holds_alternative<Constant>(decide_constant(f)))
                                 continue;
                             Verdict v = verdict_weyl_H(f);
                             const auto* nwd = std::get_if<NotWellDefined>(&v.outcome);
                             if (!r.check(nwd != nullptr,
                                          [&] { return "rule " + std::to_string(i) + " not judged NotWellDefined"; }))
                                 continue;
                             Rational input = nwd->evidence.input.final_value();
                             Rational img = nwd->evidence.image.final_value();
                             const auto& sep = *nwd->periodic_separation;
                             std::size_t ell = nwd->evidence.image.entries.back().window;
                             r.check(input < img && sep.image_lower_bound(ell) <= img, [&] {
                                 return "rule " + std::to_string(i) + ": input estimate " + to_string(input) +
                                        " not below image estimate " + to_string(img) + "\n" + format_rule(f);
                             });
                         }
                         return r.take();
                     }});

    props.push_back({"lipschitz_weyl_h", [seed, n_rules](std::mt19937_64& rng) {
                         Recorder r("lipschitz_weyl_h");
                         std::vector<std::size_t> offsets;
                         for (std::size_t k = 0; k <= 24; ++k)
                             offsets.push_back(k);
                         for (std::size_t i = 0; i < n_rules; ++i) {
                             RuleTable f = theorem_rule(seed, i);
                             if (!norms(f).uniform())
                                 continue;
                             auto pairs = random_pairs(rng, 3);
                             auto report = lipschitz_check(f, pairs, {8, 16, 32, 64},
                                                           OffsetPolicy::proportional(default_offset_factor),
                                                           Space::WeylH);
                             r.check(report.violations == 0, [&] {
                                 return "rule " + std::to_string(i) + ": Weyl-H Lipschitz bound violated\n" +
                                        format_rule(f);
                             });
                             auto lemma = lemma_lip_H_check(f, pairs, {1, 2, 3, 5, 8, 13, 21, 34}, offsets);
                             r.check(lemma.lemma_violations == 0 && lemma.proposition_violations == 0, [&] {
                                 return "rule " + std::to_string(i) + ": window bound violated\n" + format_rule(f);
                             });
                         }
                         return r.take();
                     }});

    props.push_back({"lipschitz_weyl_l", [seed, n_rules](std::mt19937_64& rng) {
                         Recorder r("lipschitz_weyl_l");
                         for (std::size_t i = 0; i < n_rules; ++i) {
                             RuleTable f = theorem_rule(seed, i);
                             if (!std::holds_alternative<DiamondUniform>(decide_diamond_uniform(f)))
                                 continue;
                             auto pairs = random_pairs(rng, 2);
                             auto report = lipschitz_check(f, pairs, {8, 16, 32},
                                                           OffsetPolicy::proportional(default_offset_factor),
                                                           Space::WeylL);
                             r.check(report.violations == 0, [&] {
                                 return "rule " + std::to_string(i) + ": Weyl-L Lipschitz bound violated\n" +
                                        format_rule(f);
                             });
                         }
                         return r.take();
                     }});

    props.push_back({"levenshtein_image_lemma", [seed, n_rules](std::mt19937_64&) {
                         Recorder r("levenshtein_image_lemma");
                         for (std::size_t i = 0; i < n_rules; ++i) {
                             RuleTable f = theorem_rule(seed, i);
                             auto report = lemma_lev_check(f, 5);
                             r.check_rule(report.violations == 0, f,
                                          [](const RuleTable& g) { return lemma_lev_check(g, 5).violations > 0; },
                                          "rule " + std::to_string(i) + ": d_L image inequality violated");
                         }
                         return r.take();
                     }});

    return run_properties("theorems", seed,
                          verify_command("theorems", seed, " --rules " + std::to_string(n_rules)), props);
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"distances", "dillmaps", "pseudometrics", "theorems"};
    return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t n_rules)
{
    if (name == "distances")
        return suite_distances(seed);
    if (name == "dillmaps")
        return suite_dillmaps(seed);
    if (name == "pseudometrics")
        return suite_pseudometrics(seed);
    if (name == "theorems")
        return suite_theorems(seed, n_rules);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace dill::proptests
