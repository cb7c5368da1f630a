#include "dill/oracles.hpp"

#include <map>
#include <stdexcept>

namespace dill::oracles {

std::optional<std::pair<Word, Word>> diamond_counterexample(const RuleTable& f, std::size_t max_length)
{
    const std::size_t a = f.alphabet().size();
    const std::size_t shared = f.diameter() - 1;
    std::uint64_t count = 1;
    for (std::size_t len = 1; len <= max_length; ++len) {
        count *= a;
        if (count > (std::uint64_t{1} << 22))
            throw std::invalid_argument("diamond brute force limited to 2^22 words per length");
        const std::size_t s = std::min(shared, len);
        // (prefix, suffix) -> first word seen and its image length
        std::map<std::pair<Word, Word>, std::pair<Word, std::size_t>> seen;
        for (std::uint64_t i = 0; i < count; ++i) {
            Word u = kernels::word_from_index(i, a, len);
            std::pair<Word, Word> key{Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(s)),
                                      Word(u.end() - static_cast<std::ptrdiff_t>(s), u.end())};
            std::size_t length = image_length(f, u);
            auto [it, inserted] = seen.try_emplace(std::move(key), u, length);
            if (!inserted && it->second.second != length)
                return std::pair{it->second.first, u};
        }
    }
    return std::nullopt;
}

namespace {

struct CycleSearch {
    const DeBruijnGraph& g;
    std::size_t start = 0;
    std::vector<bool> on_path;
    std::optional<Rational> lo, hi;

    void record(std::size_t weight, std::size_t length)
    {
        Rational m(static_cast<std::int64_t>(weight), static_cast<std::int64_t>(length));
        if (!lo || m < *lo)
            lo = m;
        if (!hi || m > *hi)
            hi = m;
    }

    // Simple cycles through `start` whose other nodes all exceed `start`.
    void extend(std::size_t node, std::size_t weight, std::size_t length)
    {
        for (std::size_t c = 0; c < g.alphabet_size(); ++c) {
            std::size_t e = g.edge_from(node, static_cast<Letter>(c));
            std::size_t next = g.target(e);
            if (next == start) {
                record(weight + g.weight(e), length + 1);
            } else if (next > start && !on_path[next]) {
                on_path[next] = true;
                extend(next, weight + g.weight(e), length + 1);
                on_path[next] = false;
            }
        }
    }
};

} // namespace

std::pair<Rational, Rational> simple_cycle_mean_range(const DeBruijnGraph& g)
{
    if (g.node_count() > 16)
        throw std::invalid_argument("simple cycle enumeration limited to 16 nodes");
    CycleSearch search{g, 0, std::vector<bool>(g.node_count(), false), std::nullopt, std::nullopt};
    for (std::size_t s = 0; s < g.node_count(); ++s) {
        search.start = s;
        search.on_path.assign(g.node_count(), false);
        search.on_path[s] = true;
        search.extend(s, 0, 0);
    }
    return {*search.lo, *search.hi};
}

} // namespace dill::oracles
