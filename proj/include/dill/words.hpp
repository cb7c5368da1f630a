#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dill {

/// Letters are indices 0..|A|-1 into an Alphabet.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;
using WordView = std::span<const Letter>;

/// Ordered finite set of single-character symbols.
class Alphabet {
public:
    explicit Alphabet(std::string symbols);

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbols() const { return symbols_; }

    bool contains(char c) const { return index_[static_cast<unsigned char>(c)] >= 0; }
    Letter index_of(char c) const;
    char symbol(Letter letter) const;

    Word encode(std::string_view text) const;
    std::string decode(WordView word) const;

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::array<int, 256> index_{};
};

/// D_j: removes the letter at position j. Throws std::out_of_range if j >= |u|.
Word delete_at(WordView u, std::size_t j);

/// Word consisting of `count` copies of `letter`.
Word repeat(Letter letter, std::size_t count);

Word concat(WordView a, WordView b);

// ---------------------------------------------------------------------------
// Infinite configurations
// ---------------------------------------------------------------------------

/// Backing implementation of a lazily evaluated one-sided infinite word.
///
/// Implementations must be deterministic and prefix-consistent: prefix(n) is
/// the first n letters of prefix(m) whenever n <= m.
class ConfigSource {
public:
    virtual ~ConfigSource() = default;
    virtual Word prefix(std::size_t n) const = 0;
    virtual std::string describe(const Alphabet& alphabet) const = 0;
};

/// Immutable handle to an infinite configuration, queried by prefix length.
class ConfigGenerator {
public:
    explicit ConfigGenerator(std::shared_ptr<const ConfigSource> source);

    Word prefix(std::size_t n) const { return source_->prefix(n); }

    /// Human-readable form; the DSL spelling for the kinds the DSL covers.
    std::string describe(const Alphabet& alphabet) const { return source_->describe(alphabet); }

private:
    std::shared_ptr<const ConfigSource> source_;
};

/// Affine block exponents: the configuration is the concatenation over
/// n >= 1 of 0^(p*n+q) 1^(r*n+s), with letters 0 and 1 being alphabet indices.
struct Ramp {
    long p = 0;
    long q = 0;
    long r = 0;
    long s = 0;

    std::size_t zeros(std::size_t n) const;
    std::size_t ones(std::size_t n) const;
    std::size_t block_length(std::size_t n) const { return zeros(n) + ones(n); }
    /// Position of the first letter of block j+1, i.e. the total length of blocks 1..j.
    std::size_t block_start(std::size_t j) const;
};

/// u^inf. Throws std::invalid_argument on an empty period.
ConfigGenerator periodic(Word period);
/// u v^inf. Throws std::invalid_argument on an empty period.
ConfigGenerator eventually_periodic(Word prefix, Word period);
/// Throws std::invalid_argument if some block exponent is negative for an n >= 1,
/// or if every block is empty.
ConfigGenerator ramp(Ramp params);
/// u fill^inf.
ConfigGenerator explicit_config(Word prefix, Letter fill);
/// sigma^t(x).
ConfigGenerator shift(const ConfigGenerator& x, std::size_t t);

/// Concatenation of block(1) block(2) block(3) ...
///
/// Blocks may be empty, but the source gives up with std::runtime_error after
/// a long run of empty blocks rather than looping forever.
ConfigGenerator block_sequence(std::function<Word(std::size_t)> block, std::string description);

} // namespace dill
