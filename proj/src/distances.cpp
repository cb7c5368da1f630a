#include "dill/distances.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dill {

std::size_t hamming(WordView u, WordView v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("hamming distance needs equal lengths (got " + std::to_string(u.size()) +
                                    " and " + std::to_string(v.size()) + ")");
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        d += u[i] != v[i];
    return d;
}

std::size_t lcs_length(WordView u, WordView v)
{
    if (u.size() < v.size())
        std::swap(u, v);
    // v is the shorter word; one row of |v|+1 counters.
    std::vector<std::size_t> row(v.size() + 1, 0);
    for (Letter a : u) {
        std::size_t diag = 0;
        for (std::size_t j = 1; j <= v.size(); ++j) {
            std::size_t up = row[j];
            row[j] = (a == v[j - 1]) ? diag + 1 : std::max(up, row[j - 1]);
            diag = up;
        }
    }
    return row[v.size()];
}

HalfInt levenshtein(WordView u, WordView v)
{
    return HalfInt(u.size() + v.size() - 2 * lcs_length(u, v));
}

namespace {

// Every word reachable by deleting a subset of positions, with the fewest
// deletions that reach it. Deletions are applied right to left so that the
// remaining positions keep their indices: D_{j1} o ... o D_{jm} with j1 < ... < jm.
std::map<Word, std::size_t> deletion_closure(WordView u)
{
    std::map<Word, std::size_t> best;
    const std::size_t n = u.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Word w(u.begin(), u.end());
        std::size_t m = 0;
        for (std::size_t j = n; j-- > 0;) {
            if (mask & (1u << j)) {
                w = delete_at(w, j);
                ++m;
            }
        }
        auto [it, inserted] = best.emplace(std::move(w), m);
        if (!inserted)
            it->second = std::min(it->second, m);
    }
    return best;
}

} // namespace

HalfInt levenshtein_oracle(WordView u, WordView v)
{
    if (u.size() + v.size() > levenshtein_oracle_limit)
        throw std::length_error("levenshtein_oracle is exponential; |u|+|v| must be at most " +
                                std::to_string(levenshtein_oracle_limit));
    auto from_u = deletion_closure(u);
    auto from_v = deletion_closure(v);
    std::size_t best = u.size() + v.size();
    for (const auto& [w, m] : from_u) {
        auto it = from_v.find(w);
        if (it != from_v.end())
            best = std::min(best, m + it->second);
    }
    return HalfInt(best);
}

Rational CantorDistance::value() const
{
    if (!first_difference)
        return Rational(0);
    if (*first_difference >= 63)
        throw std::overflow_error("2^-" + std::to_string(*first_difference) + " does not fit a 64-bit rational");
    return Rational(1, std::int64_t{1} << *first_difference);
}

std::string CantorDistance::to_string() const
{
    if (!first_difference)
        return "zero-at-budget";
    if (*first_difference >= 63)
        return "2^-" + std::to_string(*first_difference);
    return dill::to_string(value());
}

CantorDistance cantor(const ConfigGenerator& x, const ConfigGenerator& y, std::size_t budget)
{
    if (budget == 0)
        throw std::invalid_argument("cantor distance needs a budget of at least 1");
    Word a = x.prefix(budget);
    Word b = y.prefix(budget);
    CantorDistance d{budget, std::nullopt};
    auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin());
    if (ia != a.end())
        d.first_difference = static_cast<std::size_t>(ia - a.begin());
    return d;
}

} // namespace dill
