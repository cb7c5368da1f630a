#include "dill/words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dill {

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols))
{
    if (symbols_.empty())
        throw std::invalid_argument("alphabet must contain at least one letter");
    if (symbols_.size() > 255)
        throw std::invalid_argument("alphabet too large");
    index_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        auto c = static_cast<unsigned char>(symbols_[i]);
        if (index_[c] >= 0)
            throw std::invalid_argument(std::string("duplicate letter '") + symbols_[i] + "' in alphabet");
        index_[c] = static_cast<int>(i);
    }
}

Letter Alphabet::index_of(char c) const
{
    int i = index_[static_cast<unsigned char>(c)];
    if (i < 0)
        throw std::invalid_argument(std::string("letter '") + c + "' is not in alphabet \"" + symbols_ + "\"");
    return static_cast<Letter>(i);
}

char Alphabet::symbol(Letter letter) const
{
    if (letter >= symbols_.size())
        throw std::out_of_range("letter index " + std::to_string(letter) + " outside alphabet \"" + symbols_ + "\"");
    return symbols_[letter];
}

Word Alphabet::encode(std::string_view text) const
{
    Word w;
    w.reserve(text.size());
    for (char c : text)
        w.push_back(index_of(c));
    return w;
}

std::string Alphabet::decode(WordView word) const
{
    std::string s;
    s.reserve(word.size());
    for (Letter l : word)
        s.push_back(symbol(l));
    return s;
}

Word delete_at(WordView u, std::size_t j)
{
    if (j >= u.size())
        throw std::out_of_range("deletion position " + std::to_string(j) + " outside word of length " +
                                std::to_string(u.size()));
    Word out;
    out.reserve(u.size() - 1);
    out.insert(out.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(j));
    out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(j) + 1, u.end());
    return out;
}

Word repeat(Letter letter, std::size_t count) { return Word(count, letter); }

Word concat(WordView a, WordView b)
{
    Word out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

ConfigGenerator::ConfigGenerator(std::shared_ptr<const ConfigSource> source) : source_(std::move(source))
{
    if (!source_)
        throw std::invalid_argument("null configuration source");
}

namespace {

std::string describe_word(const Alphabet& alphabet, WordView w)
{
    // Letters produced by generators may exceed a small alphabet; fall back to indices.
    bool fits = std::all_of(w.begin(), w.end(), [&](Letter l) { return l < alphabet.size(); });
    if (fits)
        return alphabet.decode(w);
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < w.size(); ++i)
        os << (i ? "," : "") << int(w[i]);
    os << ']';
    return os.str();
}

class EventuallyPeriodicSource final : public ConfigSource {
public:
    EventuallyPeriodicSource(Word prefix, Word period) : prefix_(std::move(prefix)), period_(std::move(period)) {}

    Word prefix(std::size_t n) const override
    {
        Word out;
        out.reserve(n);
        for (std::size_t i = 0; i < n && i < prefix_.size(); ++i)
            out.push_back(prefix_[i]);
        for (std::size_t i = 0; out.size() < n; ++i)
            out.push_back(period_[i % period_.size()]);
        return out;
    }

    std::string describe(const Alphabet& alphabet) const override
    {
        if (prefix_.empty())
            return "periodic:" + describe_word(alphabet, period_);
        if (period_.size() == 1)
            return "word:" + describe_word(alphabet, prefix_) + "!" + describe_word(alphabet, period_);
        return "evp:" + describe_word(alphabet, prefix_) + "|" + describe_word(alphabet, period_);
    }

private:
    Word prefix_;
    Word period_;
};

class RampSource final : public ConfigSource {
public:
    explicit RampSource(Ramp params) : params_(params) {}

    Word prefix(std::size_t n) const override
    {
        Word out;
        out.reserve(n);
        for (std::size_t block = 1; out.size() < n; ++block) {
            for (std::size_t i = params_.zeros(block); i > 0 && out.size() < n; --i)
                out.push_back(0);
            for (std::size_t i = params_.ones(block); i > 0 && out.size() < n; --i)
                out.push_back(1);
        }
        return out;
    }

    std::string describe(const Alphabet&) const override
    {
        std::ostringstream os;
        os << "ramp:" << params_.p << ',' << params_.q << ',' << params_.r << ',' << params_.s;
        return os.str();
    }

private:
    Ramp params_;
};

class ShiftedSource final : public ConfigSource {
public:
    ShiftedSource(ConfigGenerator base, std::size_t offset) : base_(std::move(base)), offset_(offset) {}

    Word prefix(std::size_t n) const override
    {
        Word full = base_.prefix(n + offset_);
        return Word(full.begin() + static_cast<std::ptrdiff_t>(offset_), full.end());
    }

    std::string describe(const Alphabet& alphabet) const override
    {
        return "shift(" + base_.describe(alphabet) + "," + std::to_string(offset_) + ")";
    }

    const ConfigGenerator& base() const { return base_; }
    std::size_t offset() const { return offset_; }

private:
    ConfigGenerator base_;
    std::size_t offset_;
};

class BlockSequenceSource final : public ConfigSource {
public:
    BlockSequenceSource(std::function<Word(std::size_t)> block, std::string description)
        : block_(std::move(block)), description_(std::move(description))
    {
    }

    Word prefix(std::size_t n) const override
    {
        constexpr std::size_t max_empty_run = 4096;
        Word out;
        out.reserve(n);
        std::size_t empty_run = 0;
        for (std::size_t j = 1; out.size() < n; ++j) {
            Word b = block_(j);
            if (b.empty()) {
                if (++empty_run > max_empty_run)
                    throw std::runtime_error("block sequence produced no letters for " +
                                             std::to_string(max_empty_run) + " consecutive blocks");
                continue;
            }
            empty_run = 0;
            std::size_t take = std::min(b.size(), n - out.size());
            out.insert(out.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(take));
        }
        return out;
    }

    std::string describe(const Alphabet&) const override { return description_; }

private:
    std::function<Word(std::size_t)> block_;
    std::string description_;
};

std::size_t checked_exponent(long a, long b, std::size_t n)
{
    long v = a * static_cast<long>(n) + b;
    if (v < 0)
        throw std::invalid_argument("ramp block exponent negative at n=" + std::to_string(n));
    return static_cast<std::size_t>(v);
}

} // namespace

std::size_t Ramp::zeros(std::size_t n) const { return checked_exponent(p, q, n); }
std::size_t Ramp::ones(std::size_t n) const { return checked_exponent(r, s, n); }

std::size_t Ramp::block_start(std::size_t j) const
{
    // sum_{n=1}^{j} ((p+r) n + q + s)
    long jj = static_cast<long>(j);
    long total = (p + r) * jj * (jj + 1) / 2 + (q + s) * jj;
    return static_cast<std::size_t>(total);
}

ConfigGenerator periodic(Word period) { return eventually_periodic({}, std::move(period)); }

ConfigGenerator eventually_periodic(Word prefix, Word period)
{
    if (period.empty())
        throw std::invalid_argument("periodic configuration needs a nonempty period");
    return ConfigGenerator(std::make_shared<EventuallyPeriodicSource>(std::move(prefix), std::move(period)));
}

ConfigGenerator ramp(Ramp params)
{
    // Exponents are affine in n, so non-negativity for every n >= 1 reduces to
    // a non-negative slope and a non-negative value at n = 1.
    auto check = [](long slope, long intercept, const char* which) {
        if (slope < 0 || slope + intercept < 0)
            throw std::invalid_argument(std::string("ramp ") + which +
                                        " exponent becomes negative for some n >= 1");
    };
    check(params.p, params.q, "zero-block");
    check(params.r, params.s, "one-block");
    if (params.p + params.r == 0 && params.q + params.s == 0)
        throw std::invalid_argument("ramp produces only empty blocks");
    return ConfigGenerator(std::make_shared<RampSource>(params));
}

ConfigGenerator explicit_config(Word prefix, Letter fill) { return eventually_periodic(std::move(prefix), Word{fill}); }

ConfigGenerator shift(const ConfigGenerator& x, std::size_t t)
{
    if (t == 0)
        return x;
    return ConfigGenerator(std::make_shared<ShiftedSource>(x, t));
}

ConfigGenerator block_sequence(std::function<Word(std::size_t)> block, std::string description)
{
    return ConfigGenerator(std::make_shared<BlockSequenceSource>(std::move(block), std::move(description)));
}

} // namespace dill
