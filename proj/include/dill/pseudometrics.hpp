#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dill/kernels.hpp"
#include "dill/rational.hpp"
#include "dill/words.hpp"

namespace dill {

std::string_view to_string(Base base);
/// Accepts "hamming" / "levenshtein" (also "H" / "L"). Throws std::invalid_argument.
Base parse_base(std::string_view name);

/// max over 0 <= k <= max_offset of d(x[k,k+window), y[k,k+window)) / window.
///
/// This is a finite-budget estimate. It never stands for the limsup itself.
struct SlidingEstimate {
    Base base = Base::Hamming;
    std::size_t window = 0;
    std::size_t max_offset = 0;
    Rational value;
    /// Smallest offset attaining the maximum.
    std::size_t argmax = 0;
};

/// OpenMP offset partitioning; identical output to sliding_estimate_serial.
/// Throws std::invalid_argument if window is 0.
SlidingEstimate sliding_estimate(Base base, const ConfigGenerator& x, const ConfigGenerator& y,
                                 std::size_t window, std::size_t max_offset);
SlidingEstimate sliding_estimate_serial(Base base, const ConfigGenerator& x, const ConfigGenerator& y,
                                        std::size_t window, std::size_t max_offset);

/// Prefix-anchored d(x[0,window), y[0,window)) / window.
Rational besicovitch_estimate(Base base, const ConfigGenerator& x, const ConfigGenerator& y, std::size_t window);

/// Chooses the offset bound K for each window length.
class OffsetPolicy {
public:
    /// K = factor * window. The default policy uses factor 4.
    static OffsetPolicy proportional(std::size_t factor);
    /// K fixed for every window.
    static OffsetPolicy fixed(std::size_t max_offset);
    static OffsetPolicy custom(std::function<std::size_t(std::size_t)> rule, std::string description);

    std::size_t operator()(std::size_t window) const { return rule_(window); }
    const std::string& description() const { return description_; }

private:
    OffsetPolicy(std::function<std::size_t(std::size_t)> rule, std::string description);

    std::function<std::size_t(std::size_t)> rule_;
    std::string description_;
};

inline constexpr std::size_t default_offset_factor = 4;

struct LadderEntry {
    std::size_t window = 0;
    std::size_t max_offset = 0;
    Rational value;
};

/// One sliding estimate per window length, as a finite stand-in for the limsup.
struct LadderReport {
    Base base = Base::Hamming;
    std::string policy;
    std::vector<LadderEntry> entries;

    bool non_increasing() const;
    bool strictly_decreasing() const;
    Rational final_value() const { return entries.back().value; }

    static constexpr std::string_view disclaimer =
        "finite-budget estimates at the listed (window, offset bound); not the limsup itself";
};

/// Throws std::invalid_argument unless windows is nonempty, strictly increasing
/// and free of zeros.
LadderReport weyl_ladder(Base base, const ConfigGenerator& x, const ConfigGenerator& y,
                         const std::vector<std::size_t>& windows,
                         const OffsetPolicy& policy = OffsetPolicy::proportional(default_offset_factor));

/// One line per entry: ell<TAB>K<TAB>value_num<TAB>value_den, after a header line.
std::string to_tsv(const LadderReport& report);

} // namespace dill
