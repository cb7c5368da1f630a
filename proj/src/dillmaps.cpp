#include "dill/dillmaps.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dill {

namespace {

std::size_t checked_window_count(std::size_t alphabet_size, std::size_t diameter)
{
    std::size_t count = 1;
    for (std::size_t i = 0; i < diameter; ++i) {
        count *= alphabet_size;
        if (count > max_window_count)
            throw std::invalid_argument("rule table too large: |A|^diameter exceeds " +
                                        std::to_string(max_window_count));
    }
    return count;
}

} // namespace

RuleTable::RuleTable(Alphabet alphabet, std::size_t diameter, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), diameter_(diameter), images_(std::move(images))
{
    if (diameter_ == 0)
        throw std::invalid_argument("diameter must be at least 1");
    std::size_t expected = checked_window_count(alphabet_.size(), diameter_);
    if (images_.size() != expected)
        throw std::invalid_argument("rule table has " + std::to_string(images_.size()) + " images, expected " +
                                    std::to_string(expected));
    for (std::size_t w = 0; w < images_.size(); ++w) {
        if (images_[w].empty())
            throw std::invalid_argument("empty image for window " + alphabet_.decode(decode_window(w)));
        for (Letter l : images_[w])
            if (l >= alphabet_.size())
                throw std::invalid_argument("image letter outside alphabet for window " +
                                            alphabet_.decode(decode_window(w)));
    }
}

RuleTable RuleTable::from_function(Alphabet alphabet, std::size_t diameter,
                                   const std::function<Word(WordView)>& rule)
{
    std::size_t count = checked_window_count(alphabet.size(), diameter);
    std::vector<Word> images;
    images.reserve(count);
    Word window(diameter, 0);
    for (std::size_t w = 0; w < count; ++w) {
        std::size_t rest = w;
        for (std::size_t i = diameter; i-- > 0;) {
            window[i] = static_cast<Letter>(rest % alphabet.size());
            rest /= alphabet.size();
        }
        images.push_back(rule(window));
    }
    return RuleTable(std::move(alphabet), diameter, std::move(images));
}

std::size_t RuleTable::encode_window(WordView window) const
{
    if (window.size() != diameter_)
        throw std::invalid_argument("window of length " + std::to_string(window.size()) + ", expected " +
                                    std::to_string(diameter_));
    std::size_t index = 0;
    for (Letter l : window) {
        if (l >= alphabet_.size())
            throw std::invalid_argument("letter index " + std::to_string(l) + " outside alphabet");
        index = index * alphabet_.size() + l;
    }
    return index;
}

Word RuleTable::decode_window(std::size_t window_index) const
{
    Word window(diameter_, 0);
    for (std::size_t i = diameter_; i-- > 0;) {
        window[i] = static_cast<Letter>(window_index % alphabet_.size());
        window_index /= alphabet_.size();
    }
    return window;
}

Norms norms(const RuleTable& f)
{
    auto [lo, hi] = std::minmax_element(f.images().begin(), f.images().end(),
                                        [](const Word& a, const Word& b) { return a.size() < b.size(); });
    return {lo->size(), hi->size()};
}

namespace {

// Calls visit(window_index) for each window of u, left to right.
template <typename Visit>
void for_each_window(const RuleTable& f, WordView u, Visit&& visit)
{
    const std::size_t delta = f.diameter();
    const std::size_t a = f.alphabet().size();
    for (Letter l : u)
        if (l >= a)
            throw std::invalid_argument("letter index " + std::to_string(l) + " outside alphabet \"" +
                                        f.alphabet().symbols() + "\"");
    if (u.size() < delta)
        return;
    const std::size_t modulus = f.window_count() / a; // |A|^(delta-1)
    std::size_t index = 0;
    for (std::size_t i = 0; i + 1 < delta; ++i)
        index = index * a + u[i];
    for (std::size_t i = delta - 1; i < u.size(); ++i) {
        index = (index % modulus) * a + u[i];
        visit(index);
    }
}

} // namespace

Word apply_star(const RuleTable& f, WordView u)
{
    Word out;
    for_each_window(f, u, [&](std::size_t w) {
        const Word& img = f.image(w);
        out.insert(out.end(), img.begin(), img.end());
    });
    return out;
}

std::size_t image_length(const RuleTable& f, WordView u)
{
    std::size_t n = 0;
    for_each_window(f, u, [&](std::size_t w) { n += f.image(w).size(); });
    return n;
}

Word image_prefix(const RuleTable& f, const ConfigGenerator& x, std::size_t n)
{
    if (n == 0)
        return {};
    const std::size_t minf = norms(f).minf;
    const std::size_t windows = (n + minf - 1) / minf;
    Word input = x.prefix(windows + f.diameter() - 1);
    Word out;
    out.reserve(n + norms(f).maxf);
    for_each_window(f, input, [&](std::size_t w) {
        if (out.size() >= n)
            return;
        const Word& img = f.image(w);
        out.insert(out.end(), img.begin(), img.end());
    });
    out.resize(n);
    return out;
}

namespace {

class ImageSource final : public ConfigSource {
public:
    ImageSource(RuleTable f, ConfigGenerator x) : f_(std::move(f)), x_(std::move(x)) {}

    Word prefix(std::size_t n) const override { return image_prefix(f_, x_, n); }

    std::string describe(const Alphabet& alphabet) const override
    {
        return "F(" + x_.describe(alphabet) + ")";
    }

private:
    RuleTable f_;
    ConfigGenerator x_;
};

} // namespace

ConfigGenerator image(const RuleTable& f, ConfigGenerator x)
{
    return ConfigGenerator(std::make_shared<ImageSource>(f, std::move(x)));
}

std::size_t shift_jump(const RuleTable& f, const ConfigGenerator& x)
{
    return f.image(x.prefix(f.diameter())).size();
}

RuleTable compose_sub_ca(const RuleTable& substitution, const RuleTable& ca)
{
    if (substitution.diameter() != 1)
        throw std::invalid_argument("compose_sub_ca: substitution must have diameter 1");
    Norms n = norms(ca);
    if (n.minf != 1 || n.maxf != 1)
        throw std::invalid_argument("compose_sub_ca: inner rule is not a cellular automaton (image lengths must all be 1)");
    if (!(substitution.alphabet() == ca.alphabet()))
        throw std::invalid_argument("compose_sub_ca: alphabets differ");
    std::vector<Word> images;
    images.reserve(ca.window_count());
    for (const Word& img : ca.images())
        images.push_back(apply_star(substitution, img));
    return RuleTable(ca.alphabet(), ca.diameter(), std::move(images));
}

namespace rules {

RuleTable shift(const Alphabet& alphabet)
{
    return RuleTable::from_function(alphabet, 2, [](WordView w) { return Word{w[1]}; });
}

RuleTable xor_ca()
{
    return RuleTable::from_function(Alphabet("ab"), 2,
                                    [](WordView w) { return Word{static_cast<Letter>(w[0] ^ w[1])}; });
}

RuleTable fibonacci()
{
    Alphabet ab("ab");
    return RuleTable(ab, 1, {ab.encode("ab"), ab.encode("a")});
}

RuleTable xor_then_fibonacci() { return compose_sub_ca(fibonacci(), xor_ca()); }

RuleTable diamond_example()
{
    Alphabet ab("ab");
    // window order: aa, ab, ba, bb
    return RuleTable(ab, 2, {ab.encode("ab"), ab.encode("a"), ab.encode("bab"), ab.encode("ba")});
}

RuleTable tau011()
{
    Alphabet bits("01");
    return RuleTable(bits, 1, {bits.encode("0"), bits.encode("11")});
}

RuleTable identity_substitution(const Alphabet& alphabet)
{
    return RuleTable::from_function(alphabet, 1, [](WordView w) { return Word{w[0]}; });
}

RuleTable constant_rule(const Alphabet& alphabet, std::size_t diameter, Word image)
{
    return RuleTable::from_function(alphabet, diameter, [&](WordView) { return image; });
}

} // namespace rules

} // namespace dill
