#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dill/words.hpp"

namespace dill {

/// Local rule f : A^diameter -> A^+ of a dill map.
///
/// Images are stored densely, indexed by the base-|A| encoding of the window
/// with the first letter most significant. A rule with diameter 1 is a
/// substitution; a rule whose images all have length 1 is a cellular automaton.
class RuleTable {
public:
    /// Throws std::invalid_argument unless the table is total with nonempty
    /// images over the alphabet.
    RuleTable(Alphabet alphabet, std::size_t diameter, std::vector<Word> images);

    static RuleTable from_function(Alphabet alphabet, std::size_t diameter,
                                   const std::function<Word(WordView)>& rule);

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t diameter() const { return diameter_; }
    std::size_t window_count() const { return images_.size(); }
    const std::vector<Word>& images() const { return images_; }

    const Word& image(std::size_t window_index) const { return images_.at(window_index); }
    const Word& image(WordView window) const { return images_[encode_window(window)]; }

    std::size_t encode_window(WordView window) const;
    Word decode_window(std::size_t window_index) const;

    bool operator==(const RuleTable& other) const = default;

private:
    Alphabet alphabet_;
    std::size_t diameter_;
    std::vector<Word> images_;
};

/// Largest table accepted: |A|^diameter windows.
inline constexpr std::size_t max_window_count = std::size_t{1} << 20;

struct Norms {
    std::size_t minf = 0;
    std::size_t maxf = 0;

    bool uniform() const { return minf == maxf; }
};

Norms norms(const RuleTable& f);

/// f*(u): concatenated images of the |u|-diameter+1 windows of u, empty when
/// |u| < diameter. Throws std::invalid_argument on a letter outside the alphabet.
Word apply_star(const RuleTable& f, WordView u);

/// |f*(u)| without building the word.
std::size_t image_length(const RuleTable& f, WordView u);

/// First n letters of F(x). Reads at most ceil(n/minf) + diameter - 1 letters of x.
Word image_prefix(const RuleTable& f, const ConfigGenerator& x, std::size_t n);

/// F(x) as a configuration of its own.
ConfigGenerator image(const RuleTable& f, ConfigGenerator x);

/// s(x) = |f(x[0,diameter))|, so that F(sigma x) = sigma^s(x) F(x).
std::size_t shift_jump(const RuleTable& f, const ConfigGenerator& x);

/// Local rule of (substitution o cellular automaton): w -> tau*(ca(w)).
/// Throws std::invalid_argument unless `substitution` has diameter 1, `ca`
/// has all images of length 1, and both share an alphabet.
RuleTable compose_sub_ca(const RuleTable& substitution, const RuleTable& ca);

namespace rules {

/// f(u0 u1) = u1.
RuleTable shift(const Alphabet& alphabet);
/// f(aa) = f(bb) = a, f(ab) = f(ba) = b over {a,b}.
RuleTable xor_ca();
/// a -> ab, b -> a.
RuleTable fibonacci();
/// Xor followed by Fibonacci: aa, bb -> ab; ab, ba -> a.
RuleTable xor_then_fibonacci();
/// aa -> ab, bb -> ba, ab -> a, ba -> bab. Non-uniform, images depend only on the first letter.
RuleTable diamond_example();
/// 0 -> 0, 1 -> 11 over {0,1}.
RuleTable tau011();
/// a -> a for every letter.
RuleTable identity_substitution(const Alphabet& alphabet);
/// Every window maps to `image`.
RuleTable constant_rule(const Alphabet& alphabet, std::size_t diameter, Word image);

} // namespace rules

} // namespace dill
