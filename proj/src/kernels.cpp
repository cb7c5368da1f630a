#include "dill/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dill/distances.hpp"

namespace dill::kernels {

namespace {

void check_profile_args(WordView x, WordView y, std::size_t window, std::size_t max_offset)
{
    if (window == 0)
        throw std::invalid_argument("window length must be at least 1");
    if (x.size() < max_offset + window || y.size() < max_offset + window)
        throw std::invalid_argument("materialized prefixes shorter than max_offset + window");
}

std::uint64_t mismatches(WordView x, WordView y, std::size_t from, std::size_t to)
{
    std::uint64_t d = 0;
    for (std::size_t i = from; i < to; ++i)
        d += x[i] != y[i];
    return d;
}

// Rolling-row LCS with a caller-owned buffer, to keep allocation out of the offset loop.
std::uint32_t lcs_with_buffer(WordView u, WordView v, std::vector<std::uint32_t>& row)
{
    row.assign(v.size() + 1, 0);
    for (Letter a : u) {
        std::uint32_t diag = 0;
        for (std::size_t j = 1; j <= v.size(); ++j) {
            std::uint32_t up = row[j];
            row[j] = (a == v[j - 1]) ? diag + 1 : std::max(up, row[j - 1]);
            diag = up;
        }
    }
    return row[v.size()];
}

std::uint64_t doubled_window_levenshtein(WordView x, WordView y, std::size_t k, std::size_t window,
                                         std::vector<std::uint32_t>& row)
{
    std::uint32_t lcs = lcs_with_buffer(x.subspan(k, window), y.subspan(k, window), row);
    return 2 * (window - lcs);
}

} // namespace

std::vector<std::uint64_t> window_profile_serial(Base base, WordView x, WordView y, std::size_t window,
                                                 std::size_t max_offset)
{
    check_profile_args(x, y, window, max_offset);
    std::vector<std::uint64_t> out(max_offset + 1);
    if (base == Base::Hamming) {
        std::uint64_t d = mismatches(x, y, 0, window);
        out[0] = 2 * d;
        for (std::size_t k = 1; k <= max_offset; ++k) {
            d -= x[k - 1] != y[k - 1];
            d += x[k + window - 1] != y[k + window - 1];
            out[k] = 2 * d;
        }
    } else {
        std::vector<std::uint32_t> row;
        for (std::size_t k = 0; k <= max_offset; ++k)
            out[k] = doubled_window_levenshtein(x, y, k, window, row);
    }
    return out;
}

std::vector<std::uint64_t> window_profile(Base base, WordView x, WordView y, std::size_t window,
                                          std::size_t max_offset)
{
    check_profile_args(x, y, window, max_offset);
    const std::size_t offsets = max_offset + 1;
    std::vector<std::uint64_t> out(offsets);
    if (base == Base::Hamming) {
        // Each thread owns a contiguous offset range and slides within it.
#pragma omp parallel
        {
            std::size_t threads = 1;
            std::size_t tid = 0;
#ifdef _OPENMP
            threads = static_cast<std::size_t>(omp_get_num_threads());
            tid = static_cast<std::size_t>(omp_get_thread_num());
#endif
            const std::size_t chunk = (offsets + threads - 1) / threads;
            const std::size_t lo = std::min(offsets, tid * chunk);
            const std::size_t hi = std::min(offsets, lo + chunk);
            if (lo < hi) {
                std::uint64_t d = mismatches(x, y, lo, lo + window);
                out[lo] = 2 * d;
                for (std::size_t k = lo + 1; k < hi; ++k) {
                    d -= x[k - 1] != y[k - 1];
                    d += x[k + window - 1] != y[k + window - 1];
                    out[k] = 2 * d;
                }
            }
        }
    } else {
#pragma omp parallel
        {
            std::vector<std::uint32_t> row;
#pragma omp for schedule(dynamic, 16)
            for (std::size_t k = 0; k < offsets; ++k)
                out[k] = doubled_window_levenshtein(x, y, k, window, row);
        }
    }
    return out;
}

Word word_from_index(std::uint64_t index, std::size_t alphabet_size, std::size_t length)
{
    Word w(length, 0);
    for (std::size_t i = length; i-- > 0;) {
        w[i] = static_cast<Letter>(index % alphabet_size);
        index /= alphabet_size;
    }
    return w;
}

namespace {

struct LemmaContext {
    std::vector<Word> words;
    std::vector<Word> images;
    std::int64_t factor = 0; // maxf (2 delta - 1)
};

LemmaContext make_context(const RuleTable& f, std::size_t length)
{
    const std::size_t a = f.alphabet().size();
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < length; ++i) {
        count *= a;
        if (count > (std::uint64_t{1} << 16))
            throw std::invalid_argument("lemma scan limited to 2^16 words per length");
    }
    LemmaContext ctx;
    ctx.words.reserve(count);
    ctx.images.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        ctx.words.push_back(word_from_index(i, a, length));
        ctx.images.push_back(apply_star(f, ctx.words.back()));
    }
    ctx.factor = static_cast<std::int64_t>(norms(f).maxf * (2 * f.diameter() - 1));
    return ctx;
}

// Scan of all pairs (i, j) for a fixed i.
LevLemmaScan scan_row(const LemmaContext& ctx, std::uint64_t i)
{
    LevLemmaScan r;
    const Word& fu = ctx.images[i];
    for (std::uint64_t j = 0; j < ctx.words.size(); ++j) {
        const Word& fv = ctx.images[j];
        auto d_words = static_cast<std::int64_t>(levenshtein(ctx.words[i], ctx.words[j]).doubled());
        auto d_images = static_cast<std::int64_t>(levenshtein(fu, fv).doubled());
        auto defect = static_cast<std::int64_t>(fu.size() > fv.size() ? fu.size() - fv.size() : fv.size() - fu.size());
        std::int64_t margin = ctx.factor * d_words - defect - d_images;
        ++r.pairs;
        if (margin < 0) {
            if (r.violations == 0) {
                r.first_violation_u = i;
                r.first_violation_v = j;
            }
            ++r.violations;
        }
        if (i != j && (!r.has_tightest || margin < r.tightest_margin)) {
            r.has_tightest = true;
            r.tightest_margin = margin;
            r.tightest_u = i;
            r.tightest_v = j;
        }
    }
    return r;
}

// Rows merged in increasing i, so ties keep the lexicographically first pair.
void merge(LevLemmaScan& acc, const LevLemmaScan& row)
{
    if (row.violations && !acc.violations) {
        acc.first_violation_u = row.first_violation_u;
        acc.first_violation_v = row.first_violation_v;
    }
    acc.pairs += row.pairs;
    acc.violations += row.violations;
    if (row.has_tightest && (!acc.has_tightest || row.tightest_margin < acc.tightest_margin)) {
        acc.has_tightest = true;
        acc.tightest_margin = row.tightest_margin;
        acc.tightest_u = row.tightest_u;
        acc.tightest_v = row.tightest_v;
    }
}

} // namespace

LevLemmaScan lev_lemma_scan_serial(const RuleTable& f, std::size_t length)
{
    LemmaContext ctx = make_context(f, length);
    LevLemmaScan acc;
    for (std::uint64_t i = 0; i < ctx.words.size(); ++i)
        merge(acc, scan_row(ctx, i));
    return acc;
}

LevLemmaScan lev_lemma_scan(const RuleTable& f, std::size_t length)
{
    LemmaContext ctx = make_context(f, length);
    const auto n = static_cast<std::int64_t>(ctx.words.size());
    std::vector<LevLemmaScan> rows(ctx.words.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)] = scan_row(ctx, static_cast<std::uint64_t>(i));
    LevLemmaScan acc;
    for (const auto& row : rows)
        merge(acc, row);
    return acc;
}

} // namespace dill::kernels
