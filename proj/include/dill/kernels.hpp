#pragma once

// Data-parallel inner loops. Each kernel has a plain serial reference that
// the tests compare against; the OpenMP versions must return bit-identical
// results for every thread count.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dill/dillmaps.hpp"
#include "dill/words.hpp"

namespace dill {

enum class Base { Hamming, Levenshtein };

namespace kernels {

/// Twice the window distance d(x[k,k+window), y[k,k+window)) for k = 0..max_offset.
/// Both words must hold at least max_offset + window letters.
std::vector<std::uint64_t> window_profile_serial(Base base, WordView x, WordView y, std::size_t window,
                                                 std::size_t max_offset);
std::vector<std::uint64_t> window_profile(Base base, WordView x, WordView y, std::size_t window,
                                          std::size_t max_offset);

/// Outcome of checking, over every pair u, v in A^length,
///   2 dL(f*u, f*v) <= 2 maxf (2 delta - 1) dL(u, v) - | |f*u| - |f*v| |
/// Margins are in doubled units (right side minus left side).
struct LevLemmaScan {
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    /// Smallest margin among pairs with u != v, and the pair attaining it
    /// (lexicographically first on ties). Unset when |A|^length < 2.
    std::int64_t tightest_margin = 0;
    std::uint64_t tightest_u = 0;
    std::uint64_t tightest_v = 0;
    bool has_tightest = false;
    /// First violating pair in enumeration order, if any.
    std::uint64_t first_violation_u = 0;
    std::uint64_t first_violation_v = 0;
};

LevLemmaScan lev_lemma_scan_serial(const RuleTable& f, std::size_t length);
LevLemmaScan lev_lemma_scan(const RuleTable& f, std::size_t length);

/// Word of the given length whose base-|A| encoding is `index`.
Word word_from_index(std::uint64_t index, std::size_t alphabet_size, std::size_t length);

} // namespace kernels

} // namespace dill
