#include "dill/rule_file.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace dill {

RuleParseError::RuleParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line)
{
}

namespace {

std::string_view trim(std::string_view s)
{
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

} // namespace

RuleTable parse_rule(std::istream& in)
{
    std::optional<Alphabet> alphabet;
    std::optional<std::size_t> diameter;
    std::vector<std::optional<Word>> images;
    std::size_t window_count = 0;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        if (starts_with(line, "alphabet:")) {
            if (alphabet)
                throw RuleParseError(line_no, "duplicate alphabet header");
            std::string symbols(trim(line.substr(9)));
            if (symbols.empty())
                throw RuleParseError(line_no, "empty alphabet");
            try {
                alphabet.emplace(symbols);
            } catch (const std::invalid_argument& e) {
                throw RuleParseError(line_no, e.what());
            }
            continue;
        }
        if (starts_with(line, "diameter:")) {
            if (diameter)
                throw RuleParseError(line_no, "duplicate diameter header");
            std::string_view digits = trim(line.substr(9));
            std::size_t d = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
            if (ec != std::errc() || ptr != digits.data() + digits.size() || d == 0)
                throw RuleParseError(line_no, "diameter must be a positive integer");
            diameter = d;
            continue;
        }

        auto arrow = line.find("->");
        if (arrow == std::string_view::npos)
            throw RuleParseError(line_no, "malformed line, expected '<window> -> <image>' or a header");
        if (!alphabet || !diameter)
            throw RuleParseError(line_no, "window line before the alphabet and diameter headers");
        if (images.empty()) {
            window_count = 1;
            for (std::size_t i = 0; i < *diameter; ++i) {
                window_count *= alphabet->size();
                if (window_count > max_window_count)
                    throw RuleParseError(line_no, "rule table too large");
            }
            images.assign(window_count, std::nullopt);
        }

        std::string_view window_text = trim(line.substr(0, arrow));
        std::string_view image_text = trim(line.substr(arrow + 2));
        for (std::string_view part : {window_text, image_text})
            for (char c : part)
                if (!alphabet->contains(c))
                    throw RuleParseError(line_no, std::string("foreign letter '") + c + "' (alphabet is \"" +
                                                      alphabet->symbols() + "\")");
        if (window_text.size() != *diameter)
            throw RuleParseError(line_no, "window '" + std::string(window_text) + "' has length " +
                                              std::to_string(window_text.size()) + ", diameter is " +
                                              std::to_string(*diameter));
        if (image_text.empty())
            throw RuleParseError(line_no, "empty image for window '" + std::string(window_text) + "'");

        std::size_t index = 0;
        for (char c : window_text)
            index = index * alphabet->size() + alphabet->index_of(c);
        if (images[index])
            throw RuleParseError(line_no, "duplicate window '" + std::string(window_text) + "'");
        images[index] = alphabet->encode(image_text);
    }

    if (!alphabet)
        throw RuleParseError(0, "missing alphabet header");
    if (!diameter)
        throw RuleParseError(0, "missing diameter header");
    if (images.empty())
        throw RuleParseError(0, "rule has no window lines");

    std::vector<Word> table;
    table.reserve(images.size());
    RuleTable probe = RuleTable::from_function(*alphabet, *diameter, [](WordView) { return Word{0}; });
    for (std::size_t w = 0; w < images.size(); ++w) {
        if (!images[w])
            throw RuleParseError(0, "missing window '" + alphabet->decode(probe.decode_window(w)) +
                                        "' (the rule must be total)");
        table.push_back(std::move(*images[w]));
    }
    return RuleTable(*alphabet, *diameter, std::move(table));
}

RuleTable parse_rule(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_rule(in);
}

RuleTable load_rule_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open rule file " + path.string());
    return parse_rule(in);
}

std::string format_rule(const RuleTable& f)
{
    const Alphabet& a = f.alphabet();
    std::string out = "alphabet: " + a.symbols() + "\ndiameter: " + std::to_string(f.diameter()) + "\n";
    for (std::size_t w = 0; w < f.window_count(); ++w)
        out += a.decode(f.decode_window(w)) + " -> " + a.decode(f.image(w)) + "\n";
    return out;
}

std::string rule_digest(const RuleTable& f)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : format_rule(f)) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

long parse_long(std::string_view s, std::string_view spec)
{
    s = trim(s);
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer '" + std::string(s) + "' in configuration '" + std::string(spec) + "'");
    return v;
}

} // namespace

ConfigGenerator parse_config(std::string_view spec, const Alphabet& alphabet)
{
    auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("configuration '" + std::string(spec) +
                                    "' needs a kind prefix (periodic:, evp:, ramp:, word:)");
    std::string_view kind = spec.substr(0, colon);
    std::string_view body = spec.substr(colon + 1);

    if (kind == "periodic") {
        if (body.empty())
            throw std::invalid_argument("periodic configuration needs a nonempty word");
        return periodic(alphabet.encode(body));
    }
    if (kind == "evp") {
        auto bar = body.find('|');
        if (bar == std::string_view::npos)
            throw std::invalid_argument("evp configuration must be evp:<prefix>|<period>");
        if (bar + 1 == body.size())
            throw std::invalid_argument("evp configuration needs a nonempty period");
        return eventually_periodic(alphabet.encode(body.substr(0, bar)), alphabet.encode(body.substr(bar + 1)));
    }
    if (kind == "word") {
        auto bang = body.find('!');
        if (bang == std::string_view::npos || body.size() != bang + 2)
            throw std::invalid_argument("word configuration must be word:<prefix>!<fill-letter>");
        return explicit_config(alphabet.encode(body.substr(0, bang)), alphabet.index_of(body[bang + 1]));
    }
    if (kind == "ramp") {
        if (alphabet.size() < 2)
            throw std::invalid_argument("ramp configurations need at least two letters");
        std::vector<long> values;
        std::size_t start = 0;
        while (true) {
            auto comma = body.find(',', start);
            values.push_back(parse_long(body.substr(start, comma - start), spec));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (values.size() != 4)
            throw std::invalid_argument("ramp configuration must be ramp:<p>,<q>,<r>,<s>");
        return ramp({values[0], values[1], values[2], values[3]});
    }
    throw std::invalid_argument("unknown configuration kind '" + std::string(kind) + "'");
}

std::string infer_alphabet(std::initializer_list<std::string_view> specs)
{
    std::set<char> letters;
    for (std::string_view spec : specs) {
        auto colon = spec.find(':');
        std::string_view kind = spec.substr(0, colon);
        std::string_view body = colon == std::string_view::npos ? spec : spec.substr(colon + 1);
        if (kind == "ramp") {
            letters.insert('0');
            letters.insert('1');
            continue;
        }
        for (char c : body)
            if (c != '|' && c != '!')
                letters.insert(c);
    }
    return {letters.begin(), letters.end()};
}

} // namespace dill
