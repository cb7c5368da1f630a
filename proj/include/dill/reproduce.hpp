#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dill/rational.hpp"
#include "dill/report_json.hpp"
#include "dill/words.hpp"

namespace dill {

struct ReproduceOptions {
    /// Single window length instead of the example's default ladder.
    std::optional<std::size_t> window;
    /// Offset bound override.
    std::optional<std::size_t> max_offset;
    /// tau011-weylL: also scan every offset up to the bound.
    bool scan = false;
};

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ReproduceReport {
    std::string id;
    std::vector<std::string> notes;
    std::vector<CheckLine> checks;
    Json data;

    bool passed() const;
    std::string text() const;
};

class UnknownExample : public std::invalid_argument {
public:
    explicit UnknownExample(std::string_view id);
};

/// fibonacci-weyl, tau011-weylL, diamond-example, xor-compose, shift-jump.
const std::vector<std::string>& example_ids();
/// Throws UnknownExample (whose message lists the valid ids).
ReproduceReport reproduce(std::string_view id, const ReproduceOptions& options = {});

// ---------------------------------------------------------------------------
// The 0 -> 0, 1 -> 11 example
// ---------------------------------------------------------------------------

/// x = concatenation of 0^n 1^n, y = concatenation of 0^(n+1) 1^(n-1), n >= 1.
ConfigGenerator tau011_x();
ConfigGenerator tau011_y();

/// Offset where the image of y reads 0^ell and the image of x reads 1^ell:
/// sum_{i<=ell} (i+1) + sum_{i<=ell} 2(i-1).
std::size_t tau011_offset(std::size_t window);

struct Tau011Window {
    std::size_t window = 0;
    std::size_t offset = 0;
    Word image_x;
    Word image_y;
    HalfInt distance;
};

Tau011Window tau011_window(std::size_t window);

/// Every input window x[k,k+ell), y[k,k+ell) for k <= max_offset against
/// d_H / ell <= 2/(m+p+1) + 2/ell, with s_j = j(j+1), p = min{j : s_j >= k}
/// and m = max{j : s_j <= k+ell}.
struct Tau011InputCheck {
    std::size_t window = 0;
    std::size_t max_offset = 0;
    std::size_t offsets = 0;
    std::size_t violations = 0;
    /// Sliding-H estimate of the input pair at (window, max_offset).
    Rational estimate;
    /// Smallest (bound - d_H/ell) over the checked offsets.
    Rational tightest_margin;
};

Tau011InputCheck tau011_input_check(std::size_t window, std::size_t max_offset);

} // namespace dill
