#include "dill/pseudometrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "dill/distances.hpp"

namespace dill {

std::string_view to_string(Base base) { return base == Base::Hamming ? "hamming" : "levenshtein"; }

Base parse_base(std::string_view name)
{
    if (name == "hamming" || name == "H")
        return Base::Hamming;
    if (name == "levenshtein" || name == "L")
        return Base::Levenshtein;
    throw std::invalid_argument("unknown base distance '" + std::string(name) + "' (hamming|levenshtein)");
}

namespace {

using ProfileFn = std::vector<std::uint64_t> (*)(Base, WordView, WordView, std::size_t, std::size_t);

SlidingEstimate estimate_with(ProfileFn profile_fn, Base base, const ConfigGenerator& x, const ConfigGenerator& y,
                              std::size_t window, std::size_t max_offset)
{
    if (window == 0)
        throw std::invalid_argument("window length must be at least 1");
    Word a = x.prefix(max_offset + window);
    Word b = y.prefix(max_offset + window);
    auto profile = profile_fn(base, a, b, window, max_offset);
    auto best = std::max_element(profile.begin(), profile.end()); // first maximum
    SlidingEstimate e;
    e.base = base;
    e.window = window;
    e.max_offset = max_offset;
    e.value = Rational(static_cast<std::int64_t>(*best), static_cast<std::int64_t>(2 * window));
    e.argmax = static_cast<std::size_t>(best - profile.begin());
    return e;
}

} // namespace

SlidingEstimate sliding_estimate(Base base, const ConfigGenerator& x, const ConfigGenerator& y, std::size_t window,
                                 std::size_t max_offset)
{
    return estimate_with(&kernels::window_profile, base, x, y, window, max_offset);
}

SlidingEstimate sliding_estimate_serial(Base base, const ConfigGenerator& x, const ConfigGenerator& y,
                                        std::size_t window, std::size_t max_offset)
{
    return estimate_with(&kernels::window_profile_serial, base, x, y, window, max_offset);
}

Rational besicovitch_estimate(Base base, const ConfigGenerator& x, const ConfigGenerator& y, std::size_t window)
{
    if (window == 0)
        throw std::invalid_argument("window length must be at least 1");
    Word a = x.prefix(window);
    Word b = y.prefix(window);
    std::uint64_t doubled = base == Base::Hamming ? 2 * hamming(a, b) : levenshtein(a, b).doubled();
    return Rational(static_cast<std::int64_t>(doubled), static_cast<std::int64_t>(2 * window));
}

OffsetPolicy::OffsetPolicy(std::function<std::size_t(std::size_t)> rule, std::string description)
    : rule_(std::move(rule)), description_(std::move(description))
{
}

OffsetPolicy OffsetPolicy::proportional(std::size_t factor)
{
    return OffsetPolicy([factor](std::size_t window) { return factor * window; },
                        "K=" + std::to_string(factor) + "*ell");
}

OffsetPolicy OffsetPolicy::fixed(std::size_t max_offset)
{
    return OffsetPolicy([max_offset](std::size_t) { return max_offset; }, "K=" + std::to_string(max_offset));
}

OffsetPolicy OffsetPolicy::custom(std::function<std::size_t(std::size_t)> rule, std::string description)
{
    return OffsetPolicy(std::move(rule), std::move(description));
}

bool LadderReport::non_increasing() const
{
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].value > entries[i - 1].value)
            return false;
    return true;
}

bool LadderReport::strictly_decreasing() const
{
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].value >= entries[i - 1].value)
            return false;
    return true;
}

LadderReport weyl_ladder(Base base, const ConfigGenerator& x, const ConfigGenerator& y,
                         const std::vector<std::size_t>& windows, const OffsetPolicy& policy)
{
    if (windows.empty())
        throw std::invalid_argument("ladder needs at least one window length");
    for (std::size_t i = 0; i < windows.size(); ++i) {
        if (windows[i] == 0)
            throw std::invalid_argument("window lengths must be positive");
        if (i && windows[i] <= windows[i - 1])
            throw std::invalid_argument("window lengths must be strictly increasing");
    }
    LadderReport report;
    report.base = base;
    report.policy = policy.description();
    for (std::size_t ell : windows) {
        std::size_t k = policy(ell);
        report.entries.push_back({ell, k, sliding_estimate(base, x, y, ell, k).value});
    }
    return report;
}

std::string to_tsv(const LadderReport& report)
{
    std::string out = "ell\tK\tvalue_num\tvalue_den\n";
    for (const auto& e : report.entries)
        out += std::to_string(e.window) + "\t" + std::to_string(e.max_offset) + "\t" +
               std::to_string(e.value.numerator()) + "\t" + std::to_string(e.value.denominator()) + "\n";
    return out;
}

} // namespace dill
