#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dill/dillmaps.hpp"

namespace dill::proptests {

/// Shape of the rules a RuleSampler draws.
struct SamplerConfig {
    enum class Family {
        /// Independent image lengths in [min_image, max_image].
        Random,
        /// Every image has one length, drawn per rule.
        Uniform,
        /// Lengths c + phi(suffix) - phi(prefix) for a random node potential phi:
        /// diamond-uniform, and non-uniform whenever phi is not constant.
        Coboundary,
    };

    std::size_t alphabet_size = 2;
    std::size_t min_diameter = 1;
    std::size_t max_diameter = 2;
    std::size_t min_image = 1;
    std::size_t max_image = 3;
    Family family = Family::Random;
};

/// Deterministic stream of total rule tables for a seed. Letters are 'a', 'b', ...
class RuleSampler {
public:
    RuleSampler(SamplerConfig config, std::uint64_t seed);
    RuleTable next();
    std::mt19937_64& engine() { return rng_; }

private:
    SamplerConfig config_;
    std::mt19937_64 rng_;
};

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    /// First failure, with a shrunk rule table when a rule is involved.
    std::string message;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<PropertyResult> results;
    /// Command line that reruns exactly this suite.
    std::string reproduce;

    bool passed() const;
    std::string text() const;
};

SuiteReport suite_distances(std::uint64_t seed);
SuiteReport suite_dillmaps(std::uint64_t seed);
SuiteReport suite_pseudometrics(std::uint64_t seed);
/// Diamond-uniformity against brute force, witness re-evaluation, Weyl-H
/// separation evidence and the Lipschitz bounds, over n_rules sampled rules.
SuiteReport suite_theorems(std::uint64_t seed, std::size_t n_rules);

inline constexpr std::size_t default_theorem_rules = 100;

/// "distances", "dillmaps", "pseudometrics", "theorems".
const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t n_rules = default_theorem_rules);

/// Greedily drops trailing letters of images (keeping them nonempty) while
/// `fails` still holds, then returns the smallest table reached.
RuleTable shrink_rule(const RuleTable& f, const std::function<bool(const RuleTable&)>& fails);

/// Individual properties, exposed for the acceptance run.

/// image_prefix(f, shift(x,1), n) == image_prefix(f, x, n + s(x))[s(x):] for
/// n in [0, max_n], over n_rules sampled rules and a few configurations each.
PropertyResult check_shift_commutation(std::uint64_t seed, std::size_t n_rules, std::size_t max_n);

/// decide_diamond_uniform against the brute force up to max_length, plus a
/// re-verified witness for every negative decision. Rules cycle through the
/// three sampler families with diameter 1..3 over a binary alphabet.
PropertyResult check_diamond_decisions(std::uint64_t seed, std::size_t n_rules, std::size_t max_length);

} // namespace dill::proptests
