#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "dill/rational.hpp"
#include "dill/words.hpp"

namespace dill {

/// Number of mismatched positions. Throws std::invalid_argument on unequal lengths.
std::size_t hamming(WordView u, WordView v);

/// Length of a longest common subsequence, O(min(|u|,|v|)) memory.
std::size_t lcs_length(WordView u, WordView v);

/// Deletion-only Levenshtein distance: half the least total number of
/// deletions that make u and v equal. Computed as (|u|+|v|)/2 - LCS(u,v).
HalfInt levenshtein(WordView u, WordView v);

inline constexpr std::size_t levenshtein_oracle_limit = 16;

/// Literal deletion search over every pair of deletion sets. Exponential;
/// throws std::length_error when |u|+|v| exceeds levenshtein_oracle_limit.
HalfInt levenshtein_oracle(WordView u, WordView v);

/// Cantor distance truncated to a prefix budget.
struct CantorDistance {
    std::size_t budget = 0;
    /// First index where the prefixes disagree; empty if they agree on the budget.
    std::optional<std::size_t> first_difference;

    bool zero_at_budget() const { return !first_difference; }
    /// 2^-i as an exact rational. Throws std::overflow_error for i >= 63.
    Rational value() const;
    /// "1", "1/2", ..., "2^-i" beyond 62, or "zero-at-budget".
    std::string to_string() const;
};

/// Throws std::invalid_argument if budget is 0.
CantorDistance cantor(const ConfigGenerator& x, const ConfigGenerator& y, std::size_t budget);

} // namespace dill
