#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dill/dillmaps.hpp"

namespace dill {

/// Rule file error. `line()` is 1-based; 0 when the problem is not tied to a line
/// (e.g. a window that never appears).
class RuleParseError : public std::runtime_error {
public:
    RuleParseError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Line-oriented rule format:
///
///     # comment
///     alphabet: ab
///     diameter: 2
///     aa -> ab
///     ab -> a
///     ...
///
/// Both headers precede the window lines. Every window of A^diameter must
/// appear exactly once with a nonempty image over the alphabet.
RuleTable parse_rule(std::istream& in);
RuleTable parse_rule(std::string_view text);
RuleTable load_rule_file(const std::filesystem::path& path);

/// Canonical text form, windows in table order. parse_rule(format_rule(f)) == f.
std::string format_rule(const RuleTable& f);

/// Stable 64-bit FNV-1a digest of format_rule(f), as 16 hex digits.
std::string rule_digest(const RuleTable& f);

/// Configuration DSL:
///   periodic:<word>          word^inf
///   evp:<prefix>|<period>    prefix period^inf
///   ramp:<p>,<q>,<r>,<s>     concatenation over n >= 1 of 0^(pn+q) 1^(rn+s)
///   word:<prefix>!<fill>     prefix fill^inf
/// Ramp letters are the first two alphabet letters. Throws std::invalid_argument.
ConfigGenerator parse_config(std::string_view spec, const Alphabet& alphabet);

/// Sorted set of letters mentioned by the given DSL strings (plus the two
/// ramp letters '0','1' if a ramp appears).
std::string infer_alphabet(std::initializer_list<std::string_view> specs);

} // namespace dill
