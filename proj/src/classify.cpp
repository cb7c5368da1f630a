#include "dill/classify.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "dill/distances.hpp"

namespace dill {

// ---------------------------------------------------------------------------
// de Bruijn graph
// ---------------------------------------------------------------------------

DeBruijnGraph::DeBruijnGraph(const RuleTable& f)
    : alphabet_size_(f.alphabet().size()), diameter_(f.diameter()), node_count_(f.window_count() / alphabet_size_)
{
    weights_.reserve(f.window_count());
    for (const Word& img : f.images())
        weights_.push_back(img.size());
}

Word DeBruijnGraph::node_word(std::size_t node) const
{
    return kernels::word_from_index(node, alphabet_size_, diameter_ - 1);
}

Word DeBruijnGraph::path_word(std::size_t start, const std::vector<std::size_t>& edges) const
{
    Word w = node_word(start);
    std::size_t at = start;
    for (std::size_t e : edges) {
        if (e >= edge_count() || source(e) != at)
            throw std::invalid_argument("edge sequence is not a path in the de Bruijn graph");
        w.push_back(static_cast<Letter>(e % alphabet_size_));
        at = target(e);
    }
    return w;
}

std::size_t DeBruijnGraph::path_weight(const std::vector<std::size_t>& edges) const
{
    std::size_t total = 0;
    for (std::size_t e : edges)
        total += weights_.at(e);
    return total;
}

std::vector<std::size_t> DeBruijnGraph::connecting_path(std::size_t from, std::size_t to) const
{
    std::vector<std::size_t> path;
    std::size_t at = from;
    for (Letter c : node_word(to)) {
        std::size_t e = edge_from(at, c);
        path.push_back(e);
        at = target(e);
    }
    return path;
}

namespace {

// Karp: D_k(v) = least weight of a k-edge walk ending at v (any start).
// The optimum mean is min_v max_k (D_n(v) - D_k(v)) / (n - k), and every
// cycle on an optimal n-edge walk into the minimizing v attains it.
Cycle karp_min_mean_cycle(const DeBruijnGraph& g, std::int64_t sign)
{
    const std::size_t n = g.node_count();
    const std::size_t a = g.alphabet_size();
    auto w = [&](std::size_t e) { return sign * static_cast<std::int64_t>(g.weight(e)); };

    std::vector<std::vector<std::int64_t>> dist(n + 1, std::vector<std::int64_t>(n, 0));
    std::vector<std::vector<std::size_t>> pred(n + 1, std::vector<std::size_t>(n, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t v = 0; v < n; ++v) {
            std::int64_t best = std::numeric_limits<std::int64_t>::max();
            std::size_t best_edge = 0;
            for (std::size_t c = 0; c < a; ++c) {
                std::size_t e = c * n + v; // edges entering v: prepend any letter
                std::int64_t cand = dist[k - 1][g.source(e)] + w(e);
                if (cand < best) {
                    best = cand;
                    best_edge = e;
                }
            }
            dist[k][v] = best;
            pred[k][v] = best_edge;
        }
    }

    std::optional<Rational> lambda;
    std::size_t arg_v = 0;
    for (std::size_t v = 0; v < n; ++v) {
        Rational worst(dist[n][v] - dist[0][v], static_cast<std::int64_t>(n));
        for (std::size_t k = 1; k < n; ++k)
            worst = std::max(worst, Rational(dist[n][v] - dist[k][v], static_cast<std::int64_t>(n - k)));
        if (!lambda || worst < *lambda) {
            lambda = worst;
            arg_v = v;
        }
    }

    // Walk of n edges into arg_v, recovered backwards.
    std::vector<std::size_t> nodes(n + 1);
    std::vector<std::size_t> edges(n + 1);
    nodes[n] = arg_v;
    for (std::size_t k = n; k >= 1; --k) {
        edges[k] = pred[k][nodes[k]];
        nodes[k - 1] = g.source(edges[k]);
    }
    std::vector<std::optional<std::size_t>> seen(n);
    for (std::size_t k = 0; k <= n; ++k) {
        if (seen[nodes[k]]) {
            Cycle c;
            c.base = nodes[*seen[nodes[k]]];
            for (std::size_t i = *seen[nodes[k]] + 1; i <= k; ++i)
                c.edges.push_back(edges[i]);
            c.weight = g.path_weight(c.edges);
            if (Rational(sign) * c.mean() != *lambda)
                throw std::logic_error("mean-cycle extraction disagrees with the recurrence");
            return c;
        }
        seen[nodes[k]] = k;
    }
    throw std::logic_error("walk of n edges without a repeated node");
}

} // namespace

Cycle min_mean_cycle(const DeBruijnGraph& g) { return karp_min_mean_cycle(g, 1); }
Cycle max_mean_cycle(const DeBruijnGraph& g) { return karp_min_mean_cycle(g, -1); }

CycleMeans cycle_means(const RuleTable& f)
{
    DeBruijnGraph g(f);
    return {min_mean_cycle(g), max_mean_cycle(g)};
}

// ---------------------------------------------------------------------------
// Norms
// ---------------------------------------------------------------------------

DeltaNorms delta_norms(const RuleTable& f)
{
    if (!norms(f).uniform())
        throw std::invalid_argument("delta_norms requires a uniform rule (all images of equal length)");
    DeltaNorms d;
    std::optional<std::size_t> mind;
    const auto& imgs = f.images();
    for (std::size_t i = 0; i < imgs.size(); ++i) {
        for (std::size_t j = i + 1; j < imgs.size(); ++j) {
            std::size_t h = hamming(imgs[i], imgs[j]);
            d.maxd = std::max(d.maxd, h);
            mind = std::min(mind.value_or(h), h);
        }
    }
    d.mind = mind.value_or(0);
    return d;
}

// ---------------------------------------------------------------------------
// Constancy
// ---------------------------------------------------------------------------

ConstancyDecision decide_constant(const RuleTable& f)
{
    DeBruijnGraph g(f);
    const Word& period = f.image(0); // f(a^delta), a the first letter
    const std::size_t q = period.size();
    const std::size_t states = g.node_count() * q;

    struct Parent {
        std::size_t state;
        std::size_t edge;
    };
    std::vector<bool> visited(states, false);
    std::vector<std::optional<Parent>> parent(states);
    std::deque<std::size_t> queue;
    for (std::size_t node = 0; node < g.node_count(); ++node) {
        visited[node * q] = true;
        queue.push_back(node * q);
    }

    while (!queue.empty()) {
        std::size_t state = queue.front();
        queue.pop_front();
        std::size_t node = state / q;
        std::size_t offset = state % q;
        for (std::size_t c = 0; c < g.alphabet_size(); ++c) {
            std::size_t e = g.edge_from(node, static_cast<Letter>(c));
            const Word& img = f.image(e);
            for (std::size_t j = 0; j < img.size(); ++j) {
                if (img[j] == period[(offset + j) % q])
                    continue;
                // Recover the path that reached this state.
                std::vector<std::size_t> edges{e};
                std::size_t s = state;
                while (parent[s]) {
                    edges.push_back(parent[s]->edge);
                    s = parent[s]->state;
                }
                std::reverse(edges.begin(), edges.end());
                NotConstant nc;
                nc.prefix = g.path_word(s / q, edges);
                nc.fill = 0;
                nc.position = g.path_weight(edges) - img.size() + j;
                return nc;
            }
            std::size_t next = g.target(e) * q + (offset + img.size()) % q;
            if (!visited[next]) {
                visited[next] = true;
                parent[next] = Parent{state, e};
                queue.push_back(next);
            }
        }
    }
    return Constant{period};
}

// ---------------------------------------------------------------------------
// Diamond uniformity and witnesses
// ---------------------------------------------------------------------------

Witness Witness::oriented() const
{
    if (alpha >= 0)
        return *this;
    return Witness{v, u, -alpha, shared};
}

DiamondDecision decide_diamond_uniform(const RuleTable& f)
{
    CycleMeans means = cycle_means(f);
    if (means.equal())
        return DiamondUniform{means.min.mean()};
    return NotDiamondUniform{std::move(means.min), std::move(means.max)};
}

void verify_witness(const RuleTable& f, const Witness& w)
{
    const std::size_t shared = f.diameter() - 1;
    if (w.u.size() != w.v.size())
        throw std::invalid_argument("witness words differ in length");
    if (w.shared != shared)
        throw std::invalid_argument("witness shared length is not diameter-1");
    const std::size_t s = std::min(shared, w.u.size());
    if (!std::equal(w.u.begin(), w.u.begin() + static_cast<std::ptrdiff_t>(s), w.v.begin()))
        throw std::invalid_argument("witness words do not share their prefix");
    if (!std::equal(w.u.end() - static_cast<std::ptrdiff_t>(s), w.u.end(), w.v.end() - static_cast<std::ptrdiff_t>(s)))
        throw std::invalid_argument("witness words do not share their suffix");
    auto alpha = static_cast<std::int64_t>(image_length(f, w.u)) - static_cast<std::int64_t>(image_length(f, w.v));
    if (alpha != w.alpha)
        throw std::invalid_argument("witness length defect does not match f*");
    if (alpha == 0)
        throw std::invalid_argument("witness has zero length defect");
}

Witness witness_pair(const RuleTable& f, const Cycle& c1, const Cycle& c2)
{
    if (c1.mean() == c2.mean())
        throw std::invalid_argument("witness_pair needs cycles with distinct mean weights");
    DeBruijnGraph g(f);
    std::vector<std::size_t> bridge = g.connecting_path(c1.base, c2.base);

    std::vector<std::size_t> u_edges;
    for (std::size_t i = 0; i < c2.length(); ++i)
        u_edges.insert(u_edges.end(), c1.edges.begin(), c1.edges.end());
    u_edges.insert(u_edges.end(), bridge.begin(), bridge.end());

    std::vector<std::size_t> v_edges = bridge;
    for (std::size_t i = 0; i < c1.length(); ++i)
        v_edges.insert(v_edges.end(), c2.edges.begin(), c2.edges.end());

    Witness w;
    w.u = g.path_word(c1.base, u_edges);
    w.v = g.path_word(c1.base, v_edges);
    w.shared = f.diameter() - 1;
    w.alpha = static_cast<std::int64_t>(c2.length() * c1.weight) - static_cast<std::int64_t>(c1.length() * c2.weight);
    verify_witness(f, w);
    return w;
}

Rational length_defect_bound(const RuleTable& f)
{
    auto decision = decide_diamond_uniform(f);
    const auto* du = std::get_if<DiamondUniform>(&decision);
    if (!du)
        throw std::invalid_argument("length_defect_bound requires a diamond-uniform rule");
    DeBruijnGraph g(f);
    // Edge weights are mean + phi(target) - phi(source) for a potential phi.
    std::vector<std::optional<Rational>> phi(g.node_count());
    phi[0] = Rational(0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t node = queue.front();
        queue.pop_front();
        for (std::size_t c = 0; c < g.alphabet_size(); ++c) {
            std::size_t e = g.edge_from(node, static_cast<Letter>(c));
            Rational next = *phi[node] + Rational(static_cast<std::int64_t>(g.weight(e))) - du->mean;
            if (!phi[g.target(e)]) {
                phi[g.target(e)] = next;
                queue.push_back(g.target(e));
            } else if (*phi[g.target(e)] != next) {
                throw std::logic_error("cycle means agree but no potential exists");
            }
        }
    }
    Rational lo = *phi[0], hi = *phi[0];
    for (const auto& p : phi) {
        lo = std::min(lo, *p);
        hi = std::max(hi, *p);
    }
    return Rational(2) * (hi - lo);
}

std::size_t separating_block_start(const Witness& wit, std::size_t j)
{
    if (j == 0)
        throw std::invalid_argument("separating blocks are numbered from 1");
    const auto alpha = static_cast<std::size_t>(wit.alpha < 0 ? -wit.alpha : wit.alpha);
    const std::size_t before = j - 1;
    // sum_{i=1}^{j-1} (|u| + 2 i alpha)
    return before * wit.u.size() + alpha * before * j;
}

std::pair<ConfigGenerator, ConfigGenerator> separating_configs(const RuleTable& f, const Witness& wit,
                                                               const ConfigGenerator& x, const ConfigGenerator& y)
{
    if (wit.alpha == 0)
        throw std::invalid_argument("separating configurations need a nonzero length defect");
    verify_witness(f, wit);
    Witness o = wit.oriented();
    const auto alpha = static_cast<std::size_t>(o.alpha);
    auto make = [&](const Word& head) {
        const Alphabet& a = f.alphabet();
        std::string text = "separating(" + a.decode(head) + "; " + x.describe(a) + "; " + y.describe(a) + ")";
        return block_sequence(
            [head, x, y, alpha](std::size_t j) {
                Word block = head;
                Word xs = x.prefix(j * alpha);
                Word ys = y.prefix(j * alpha);
                block.insert(block.end(), xs.begin(), xs.end());
                block.insert(block.end(), ys.begin(), ys.end());
                return block;
            },
            std::move(text));
    };
    return {make(o.u), make(o.v)};
}

std::size_t separating_offset_bound(const RuleTable& f, const Witness& wit, std::size_t window)
{
    const auto alpha = static_cast<std::size_t>(wit.alpha < 0 ? -wit.alpha : wit.alpha);
    const std::size_t blocks = (2 * window + alpha - 1) / alpha + 2;
    return norms(f).maxf * separating_block_start(wit, blocks + 1);
}

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

std::string_view to_string(Space space) { return space == Space::WeylH ? "WeylH" : "WeylL"; }

Space parse_space(std::string_view name)
{
    if (name == "WeylH" || name == "H" || name == "weyl-h" || name == "hamming")
        return Space::WeylH;
    if (name == "WeylL" || name == "L" || name == "weyl-l" || name == "levenshtein")
        return Space::WeylL;
    throw std::invalid_argument("unknown space '" + std::string(name) + "' (WeylH|WeylL)");
}

std::string_view to_string(Reason reason)
{
    switch (reason) {
    case Reason::Uniform:
        return "uniform";
    case Reason::Constant:
        return "constant";
    case Reason::DiamondUniform:
        return "diamond-uniform";
    }
    return "?";
}

VerdictBudget default_budget(Space space)
{
    if (space == Space::WeylH)
        return {{8, 16, 32, 64}, default_offset_factor};
    return {{8, 16, 32}, default_offset_factor};
}

Rational EventuallyPeriodicSeparation::image_lower_bound(std::size_t window) const
{
    return Rational(static_cast<std::int64_t>(window / image_period), static_cast<std::int64_t>(window));
}

namespace {

Word periodic_letters(const Word& period, std::size_t n)
{
    Word out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(period[i % period.size()]);
    return out;
}

// Images of prefix_x period^inf and prefix_y period^inf are head R^inf; they
// disagree with positive density iff R^inf differs from itself shifted by the
// head-length difference.
std::optional<EventuallyPeriodicSeparation> test_separation(const RuleTable& f, const Word& px, const Word& py,
                                                            const Word& period)
{
    const std::size_t delta = f.diameter();
    Word lead = periodic_letters(period, delta - 1);
    std::size_t hx = image_length(f, concat(px, lead));
    std::size_t hy = image_length(f, concat(py, lead));
    Word tail = apply_star(f, periodic_letters(period, period.size() + delta - 1));
    const std::size_t q = tail.size();
    const std::size_t d = (hx % q + q - hy % q) % q;
    if (d == 0)
        return std::nullopt;
    for (std::size_t i = 0; i < q; ++i) {
        if (tail[i] != tail[(i + d) % q]) {
            EventuallyPeriodicSeparation sep;
            sep.prefix_x = px;
            sep.prefix_y = py;
            sep.period = period;
            sep.image_period = q;
            sep.tail_start = std::max(hx, hy);
            return sep;
        }
    }
    return std::nullopt;
}

EventuallyPeriodicSeparation find_periodic_separation(const RuleTable& f, const NotConstant& nc)
{
    const std::size_t a = f.alphabet().size();
    const std::size_t delta = f.diameter();
    constexpr std::uint64_t enumeration_cap = std::uint64_t{1} << 16;

    // Equal-length words with a common (delta-1)-suffix and different image lengths.
    const Word& w1 = f.image(0);
    std::size_t second = 1;
    while (f.image(second).size() == w1.size())
        ++second;
    Word u = f.decode_window(0);
    Word v = f.decode_window(second);
    if (delta > 1) {
        Word pad = repeat(0, delta - 1);
        Word u1 = concat(u, pad), v1 = concat(v, pad);
        if (image_length(f, u1) != image_length(f, v1)) {
            u = std::move(u1);
            v = std::move(v1);
        } else {
            u = concat(WordView(u).subspan(1), pad);
            v = concat(WordView(v).subspan(1), pad);
        }
    }
    const auto k = static_cast<std::int64_t>(image_length(f, u)) - static_cast<std::int64_t>(image_length(f, v));
    const std::size_t span = static_cast<std::size_t>(k < 0 ? -k : k) + delta;

    std::uint64_t count = 1;
    for (std::size_t len = 1; len <= span; ++len) {
        count *= a;
        if (count > enumeration_cap)
            break;
        for (std::uint64_t i = 0; i < count; ++i)
            if (auto sep = test_separation(f, u, v, kernels::word_from_index(i, a, len)))
                return *sep;
    }

    // Every image is periodic with the same period: use the non-constancy witness directly.
    if (auto sep = test_separation(f, nc.prefix, repeat(nc.fill, nc.prefix.size()), Word{nc.fill}))
        return *sep;

    for (std::size_t len = 1; len <= delta + 2; ++len) {
        std::uint64_t words = 1;
        for (std::size_t i = 0; i < len; ++i)
            words *= a;
        if (words * words > enumeration_cap)
            break;
        for (std::uint64_t i = 0; i < words; ++i)
            for (std::uint64_t j = i + 1; j < words; ++j)
                for (std::size_t plen = 1; plen <= 2; ++plen)
                    for (std::uint64_t p = 0; p < (plen == 1 ? a : a * a); ++p)
                        if (auto sep = test_separation(f, kernels::word_from_index(i, a, len),
                                                       kernels::word_from_index(j, a, len),
                                                       kernels::word_from_index(p, a, plen)))
                            return *sep;
    }
    throw std::logic_error("non-uniform, non-constant rule without a separating pair in the searched range");
}

SeparatingEvidence build_evidence(const RuleTable& f, Base base, ConfigGenerator x, ConfigGenerator y,
                                  const std::vector<std::size_t>& windows, const OffsetPolicy& input_policy,
                                  const OffsetPolicy& image_policy)
{
    const Alphabet& a = f.alphabet();
    SeparatingEvidence ev{x, y, x.describe(a), y.describe(a), {}, {}};
    ev.input = weyl_ladder(base, x, y, windows, input_policy);
    ev.image = weyl_ladder(base, image(f, x), image(f, y), windows, image_policy);
    return ev;
}

} // namespace

Verdict verdict_weyl_H(const RuleTable& f, const VerdictBudget& budget)
{
    Verdict verdict{Space::WeylH, WellDefined{Reason::Uniform}};
    if (norms(f).uniform())
        return verdict;
    auto constancy = decide_constant(f);
    if (std::holds_alternative<Constant>(constancy)) {
        verdict.outcome = WellDefined{Reason::Constant};
        return verdict;
    }
    auto sep = find_periodic_separation(f, std::get<NotConstant>(constancy));
    // Extend the ladder until the image lower bound clears the input's |prefix|/ell.
    std::vector<std::size_t> windows = budget.windows;
    while (windows.back() / sep.image_period <= sep.prefix_x.size())
        windows.push_back(2 * windows.back());
    const std::size_t factor = budget.offset_factor;
    const std::size_t tail = sep.tail_start;
    auto policy = OffsetPolicy::custom([factor, tail](std::size_t ell) { return std::max(factor * ell, tail); },
                                       "K=max(" + std::to_string(factor) + "*ell," + std::to_string(tail) + ")");
    NotWellDefined nwd{build_evidence(f, Base::Hamming, eventually_periodic(sep.prefix_x, sep.period),
                                      eventually_periodic(sep.prefix_y, sep.period), windows, policy, policy),
                       sep, std::nullopt, std::nullopt};
    verdict.outcome = std::move(nwd);
    return verdict;
}

std::vector<ConfigGenerator> weyl_l_samples(const RuleTable& f, const std::optional<Witness>& witness)
{
    std::vector<ConfigGenerator> out;
    const std::size_t a = f.alphabet().size();
    for (std::size_t c = 0; c < a; ++c)
        out.push_back(periodic(Word{static_cast<Letter>(c)}));
    for (std::size_t c = 0; c < a; ++c)
        for (std::size_t d = 0; d < a; ++d)
            if (c != d)
                out.push_back(periodic(Word{static_cast<Letter>(c), static_cast<Letter>(d)}));
    if (witness) {
        out.push_back(periodic(witness->u));
        out.push_back(periodic(witness->v));
    }
    return out;
}

Verdict verdict_weyl_L(const RuleTable& f, const VerdictBudget& budget)
{
    Verdict verdict{Space::WeylL, WellDefined{Reason::DiamondUniform}};
    auto decision = decide_diamond_uniform(f);
    const auto* nd = std::get_if<NotDiamondUniform>(&decision);
    if (!nd)
        return verdict;

    Witness wit = witness_pair(f, nd->low, nd->high);
    auto samples = weyl_l_samples(f, wit);
    const std::size_t largest = budget.windows.back();
    const std::size_t k_largest = budget.offset_factor * largest;

    std::optional<std::pair<std::size_t, std::size_t>> best_pair;
    Rational best(-1);
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            Rational e = sliding_estimate(Base::Levenshtein, image(f, samples[i]), image(f, samples[j]), largest,
                                          k_largest)
                             .value;
            if (e > best) {
                best = e;
                best_pair = {i, j};
            }
        }
    }

    if (!best_pair || best <= weyl_l_threshold) {
        verdict.outcome = Unknown{"not diamond-uniform; no sampled pair of images stayed above the threshold, "
                                  "so W_L-constancy could not be ruled out at this budget",
                                  std::max(best, Rational(0))};
        return verdict;
    }

    const auto& x = samples[best_pair->first];
    const auto& y = samples[best_pair->second];
    auto policy = OffsetPolicy::proportional(budget.offset_factor);
    SeparatingEvidence sampled = build_evidence(f, Base::Levenshtein, x, y, budget.windows, policy, policy);

    auto [z, w] = separating_configs(f, wit, x, y);
    auto separating_policy = OffsetPolicy::custom(
        [f, wit](std::size_t ell) { return separating_offset_bound(f, wit, ell); }, "K=separating-block-bound");
    SeparatingEvidence evidence =
        build_evidence(f, Base::Levenshtein, z, w, budget.windows, separating_policy, separating_policy);

    verdict.outcome = NotWellDefined{std::move(evidence), std::nullopt, wit, std::move(sampled)};
    return verdict;
}

// ---------------------------------------------------------------------------
// Lipschitz checks
// ---------------------------------------------------------------------------

Rational lipschitz_constant(const RuleTable& f, Space space)
{
    Norms n = norms(f);
    const auto delta = static_cast<std::int64_t>(f.diameter());
    if (space == Space::WeylH) {
        if (!n.uniform())
            throw std::invalid_argument("Weyl-H Lipschitz bound requires a uniform rule");
        return Rational(delta * static_cast<std::int64_t>(delta_norms(f).maxd), static_cast<std::int64_t>(n.minf));
    }
    if (!std::holds_alternative<DiamondUniform>(decide_diamond_uniform(f)))
        throw std::invalid_argument("Weyl-L Lipschitz bound requires a diamond-uniform rule");
    return Rational((2 * delta - 1) * static_cast<std::int64_t>(n.maxf), static_cast<std::int64_t>(n.minf));
}

Rational lipschitz_slack(const RuleTable& f, Space space, std::size_t window)
{
    Norms n = norms(f);
    const auto delta = static_cast<std::int64_t>(f.diameter());
    const auto ell = static_cast<std::int64_t>(window);
    if (space == Space::WeylH) {
        auto maxd = static_cast<std::int64_t>(delta_norms(f).maxd);
        return Rational(delta * delta * maxd + 2 * static_cast<std::int64_t>(n.minf), ell);
    }
    Rational c = length_defect_bound(f);
    return (Rational(static_cast<std::int64_t>(n.maxf) * (2 * delta * delta - delta + 2)) + Rational(2) * c) /
           Rational(ell);
}

LipschitzReport lipschitz_check(const RuleTable& f, const std::vector<ConfigPair>& pairs,
                                const std::vector<std::size_t>& windows, const OffsetPolicy& policy, Space space)
{
    LipschitzReport report;
    report.space = space;
    report.constant = lipschitz_constant(f, space);
    const Base base = space == Space::WeylH ? Base::Hamming : Base::Levenshtein;
    const std::size_t minf = norms(f).minf;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& [x, y] = pairs[p];
        ConfigGenerator fx = image(f, x), fy = image(f, y);
        for (std::size_t ell : windows) {
            LipschitzRow row;
            row.pair = p;
            row.window = ell;
            row.max_offset = policy(ell);
            row.input_window = std::max<std::size_t>(1, ell / minf);
            row.input_max_offset = (row.max_offset + minf - 1) / minf;
            row.input = sliding_estimate(base, x, y, row.input_window, row.input_max_offset).value;
            row.image = sliding_estimate(base, fx, fy, ell, row.max_offset).value;
            row.bound = report.constant * row.input + lipschitz_slack(f, space, ell);
            row.margin = row.bound - row.image;
            if (row.margin < Rational(0))
                ++report.violations;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

LevLemmaReport lemma_lev_check(const RuleTable& f, std::size_t max_length)
{
    LevLemmaReport report;
    for (std::size_t len = 1; len <= max_length; ++len) {
        auto scan = kernels::lev_lemma_scan(f, len);
        report.pairs += scan.pairs;
        report.violations += scan.violations;
        if (scan.has_tightest &&
            (!report.tightest_doubled_margin || scan.tightest_margin < *report.tightest_doubled_margin)) {
            const std::size_t a = f.alphabet().size();
            report.tightest_doubled_margin = scan.tightest_margin;
            report.tightest_u = f.alphabet().decode(kernels::word_from_index(scan.tightest_u, a, len));
            report.tightest_v = f.alphabet().decode(kernels::word_from_index(scan.tightest_v, a, len));
        }
        report.rows.push_back({len, scan});
    }
    return report;
}

LipHReport lemma_lip_H_check(const RuleTable& f, const std::vector<ConfigPair>& pairs,
                             const std::vector<std::size_t>& windows, const std::vector<std::size_t>& offsets)
{
    Norms n = norms(f);
    if (!n.uniform())
        throw std::invalid_argument("lemma_lip_H_check requires a uniform rule");
    const DeltaNorms dn = delta_norms(f);
    const auto minf = static_cast<std::int64_t>(n.minf);
    const auto delta = static_cast<std::int64_t>(f.diameter());
    const auto maxd = static_cast<std::int64_t>(dn.maxd);

    std::size_t max_window = 0, max_offset = 0;
    for (std::size_t w : windows)
        max_window = std::max(max_window, w);
    for (std::size_t k : offsets)
        max_offset = std::max(max_offset, k);
    const std::size_t image_len = max_window + max_offset;
    const std::size_t input_len = image_len / n.minf + f.diameter() + 1;

    auto segment_distance = [](const Word& a, const Word& b, std::int64_t from, std::int64_t to) {
        std::size_t d = 0;
        for (std::int64_t i = from; i < to; ++i)
            d += a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)];
        return static_cast<std::int64_t>(d);
    };

    LipHReport report;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& [x, y] = pairs[p];
        Word xs = x.prefix(input_len), ys = y.prefix(input_len);
        Word fx = image_prefix(f, x, image_len), fy = image_prefix(f, y, image_len);
        for (std::size_t ell : windows) {
            for (std::size_t k : offsets) {
                const auto kk = static_cast<std::int64_t>(k);
                const auto ll = static_cast<std::int64_t>(ell);
                const std::int64_t m = (kk + minf - 1) / minf;
                const std::int64_t pp = (ll + kk) / minf - (m + 1);
                const std::int64_t lhs = segment_distance(fx, fy, kk, kk + ll);
                const std::int64_t lemma_end = std::max(m, m + pp + delta);
                const std::int64_t prop_end = std::max(m, m + pp);
                const std::int64_t lemma_bound = segment_distance(xs, ys, m, lemma_end) * delta * maxd + 2 * minf;
                const std::int64_t prop_bound =
                    segment_distance(xs, ys, m, prop_end) * delta * maxd + delta * delta * maxd + 2 * minf;
                ++report.checks;
                const std::int64_t lemma_margin = lemma_bound - lhs;
                const std::int64_t prop_margin = prop_bound - lhs;
                report.tightest_lemma_margin = std::min(report.tightest_lemma_margin.value_or(lemma_margin), lemma_margin);
                report.tightest_proposition_margin =
                    std::min(report.tightest_proposition_margin.value_or(prop_margin), prop_margin);
                if (lemma_margin < 0)
                    ++report.lemma_violations;
                if (prop_margin < 0)
                    ++report.proposition_violations;
                if (lemma_margin < 0 || prop_margin < 0)
                    report.violating_rows.push_back({p, ell, k, static_cast<std::size_t>(lhs),
                                                     static_cast<std::size_t>(lemma_bound),
                                                     static_cast<std::size_t>(prop_bound)});
            }
        }
    }
    return report;
}

} // namespace dill
