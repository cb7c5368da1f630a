#pragma once

// Slow definitional checks that the fast decision procedures are compared against.

#include <cstddef>
#include <optional>
#include <utility>

#include "dill/classify.hpp"

namespace dill::oracles {

/// Enumerates every u, v in A^len for len <= max_length that share their first
/// and last min(delta-1, len) letters, and returns the first pair whose f*-images
/// differ in length. Empty means diamond-uniform up to max_length.
std::optional<std::pair<Word, Word>> diamond_counterexample(const RuleTable& f, std::size_t max_length);

/// Least and greatest mean weight over all simple cycles, found by depth-first
/// enumeration. Intended for graphs with a handful of nodes.
std::pair<Rational, Rational> simple_cycle_mean_range(const DeBruijnGraph& g);

} // namespace dill::oracles
