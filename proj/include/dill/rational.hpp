#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace dill {

/// Exact rational used for every normalized quantity (estimates, means, bounds).
using Rational = boost::rational<std::int64_t>;

/// "n" for integers, "n/d" otherwise. Never a decimal.
std::string to_string(const Rational& r);

/// A non-negative half-integer, stored as twice its value.
///
/// The deletion-based Levenshtein distance is half a count of deletions, so
/// it lands on this lattice exactly.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::uint64_t doubled) : doubled_(doubled) {}

    static constexpr HalfInt from_integer(std::uint64_t n) { return HalfInt(2 * n); }

    constexpr std::uint64_t doubled() const { return doubled_; }
    constexpr bool is_integer() const { return doubled_ % 2 == 0; }

    Rational value() const { return {static_cast<std::int64_t>(doubled_), 2}; }

    constexpr HalfInt operator+(HalfInt other) const { return HalfInt(doubled_ + other.doubled_); }

    constexpr auto operator<=>(const HalfInt&) const = default;

private:
    std::uint64_t doubled_ = 0;
};

/// "n" for integers, "n/2" for odd halves.
std::string to_string(HalfInt h);

} // namespace dill
