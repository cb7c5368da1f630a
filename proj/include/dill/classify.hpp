#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dill/dillmaps.hpp"
#include "dill/kernels.hpp"
#include "dill/pseudometrics.hpp"
#include "dill/rational.hpp"

namespace dill {

// ---------------------------------------------------------------------------
// de Bruijn graph of a rule
// ---------------------------------------------------------------------------

/// Nodes are the words of A^(delta-1); every window w of A^delta is an edge
/// from w[0,delta-1) to w[1,delta) weighted by |f(w)|. Node and edge ids are
/// the base-|A| encodings of those words, so edge ids coincide with window ids.
///
/// A path of n edges from node u0 spells a word of length n+delta-1 starting
/// with u0, and its weight is the length of that word's f*-image.
class DeBruijnGraph {
public:
    explicit DeBruijnGraph(const RuleTable& f);

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return weights_.size(); }
    std::size_t alphabet_size() const { return alphabet_size_; }

    std::size_t source(std::size_t edge) const { return edge / alphabet_size_; }
    std::size_t target(std::size_t edge) const { return edge % node_count_; }
    std::size_t weight(std::size_t edge) const { return weights_[edge]; }
    /// Edge leaving `node` by appending `letter`.
    std::size_t edge_from(std::size_t node, Letter letter) const { return node * alphabet_size_ + letter; }

    Word node_word(std::size_t node) const;
    /// Word spelled by `edges` read from `start`. Throws std::invalid_argument if not a path.
    Word path_word(std::size_t start, const std::vector<std::size_t>& edges) const;
    std::size_t path_weight(const std::vector<std::size_t>& edges) const;
    /// The delta-1 edges that spell node `to` after node `from`.
    std::vector<std::size_t> connecting_path(std::size_t from, std::size_t to) const;

private:
    std::size_t alphabet_size_;
    std::size_t diameter_;
    std::size_t node_count_;
    std::vector<std::size_t> weights_;
};

struct Cycle {
    std::size_t base = 0;
    std::vector<std::size_t> edges;
    std::size_t weight = 0;

    std::size_t length() const { return edges.size(); }
    Rational mean() const
    {
        return {static_cast<std::int64_t>(weight), static_cast<std::int64_t>(edges.size())};
    }
};

/// Karp's recurrence in exact integer arithmetic, with a cycle attaining the optimum.
Cycle min_mean_cycle(const DeBruijnGraph& g);
Cycle max_mean_cycle(const DeBruijnGraph& g);

struct CycleMeans {
    Cycle min;
    Cycle max;

    bool equal() const { return min.mean() == max.mean(); }
};

CycleMeans cycle_means(const RuleTable& f);

// ---------------------------------------------------------------------------
// Norms of uniform rules
// ---------------------------------------------------------------------------

/// mind = min Hamming distance between images of distinct windows,
/// maxd = max over all pairs. Only defined for uniform rules.
struct DeltaNorms {
    std::size_t mind = 0;
    std::size_t maxd = 0;
};

/// Throws std::invalid_argument for non-uniform rules.
DeltaNorms delta_norms(const RuleTable& f);

// ---------------------------------------------------------------------------
// Constancy
// ---------------------------------------------------------------------------

struct Constant {
    /// F(x) = period^inf for every x.
    Word period;
};

/// F(prefix fill^inf) and F(fill^inf) differ at `position`.
struct NotConstant {
    Word prefix;
    Letter fill = 0;
    std::size_t position = 0;

    ConfigGenerator x() const { return explicit_config(prefix, fill); }
    ConfigGenerator y() const { return periodic(Word{fill}); }
};

using ConstancyDecision = std::variant<Constant, NotConstant>;

/// Exact decision. The candidate period is f(a^delta) for the first letter a;
/// a breadth-first search over (de Bruijn node, offset in the period) checks
/// every edge image against that periodic word.
ConstancyDecision decide_constant(const RuleTable& f);

// ---------------------------------------------------------------------------
// Diamond uniformity
// ---------------------------------------------------------------------------

/// Equal-length words sharing their first and last delta-1 letters
/// (overlapping when short), with f*-image lengths differing by alpha != 0.
struct Witness {
    Word u;
    Word v;
    std::int64_t alpha = 0;
    std::size_t shared = 0;

    /// The same witness with u and v exchanged, so that alpha > 0.
    Witness oriented() const;
};

struct DiamondUniform {
    /// Common mean weight of every cycle, i.e. the asymptotic image length per letter.
    Rational mean;
};

struct NotDiamondUniform {
    Cycle low;
    Cycle high;
};

using DiamondDecision = std::variant<DiamondUniform, NotDiamondUniform>;

/// Diamond-uniform iff every cycle of the de Bruijn graph has the same mean weight.
DiamondDecision decide_diamond_uniform(const RuleTable& f);

/// From cycles c1 (base n1) and c2 (base n2) and a connecting path p from n1
/// to n2: u spells c1^|c2| p and v spells p c2^|c1|, both from n1. Then
/// alpha = |c2| weight(c1) - |c1| weight(c2). The result is re-checked by
/// evaluating f*. Throws std::invalid_argument when the means are equal.
Witness witness_pair(const RuleTable& f, const Cycle& c1, const Cycle& c2);

/// Throws std::invalid_argument if w is not a witness for f.
void verify_witness(const RuleTable& f, const Witness& w);

/// Largest possible | |f*u| - |f*v| | over equal-length u, v, for a
/// diamond-uniform rule: twice the spread of the cycle-mean potential.
/// Throws std::invalid_argument if f is not diamond-uniform.
Rational length_defect_bound(const RuleTable& f);

/// Interleaves the witness words with growing prefixes of x and y:
///   z = u x[0,a) y[0,a) u x[0,2a) y[0,2a) u x[0,3a) y[0,3a) ...
///   w = the same with v in place of u,
/// where a = alpha > 0 (the witness is oriented first).
/// Throws std::invalid_argument if alpha is 0 or the witness does not check.
std::pair<ConfigGenerator, ConfigGenerator> separating_configs(const RuleTable& f, const Witness& wit,
                                                               const ConfigGenerator& x, const ConfigGenerator& y);

/// Position in z (and w) where block j of the separating configurations starts.
std::size_t separating_block_start(const Witness& wit, std::size_t j);

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

enum class Space { WeylH, WeylL };

std::string_view to_string(Space space);
Space parse_space(std::string_view name);

enum class Reason { Uniform, Constant, DiamondUniform };

std::string_view to_string(Reason reason);

struct WellDefined {
    Reason reason;
};

/// Two configurations whose inputs are asymptotically close (input ladder
/// trending to 0) while their images stay apart (image ladder).
struct SeparatingEvidence {
    ConfigGenerator x;
    ConfigGenerator y;
    std::string x_text;
    std::string y_text;
    LadderReport input;
    LadderReport image;
};

/// Weyl-H evidence: x = prefix_x period^inf, y = prefix_y period^inf with
/// |prefix_x| = |prefix_y|. Their images are head_x R^inf and head_y R^inf,
/// |R| = image_period, and from tail_start on they disagree at least once in
/// every image_period consecutive positions.
struct EventuallyPeriodicSeparation {
    Word prefix_x;
    Word prefix_y;
    Word period;
    std::size_t image_period = 0;
    std::size_t tail_start = 0;

    /// floor(window / image_period) / window, valid when the offset bound is at least tail_start.
    Rational image_lower_bound(std::size_t window) const;
};

struct NotWellDefined {
    SeparatingEvidence evidence;
    std::optional<EventuallyPeriodicSeparation> periodic_separation; // Weyl-H
    std::optional<Witness> witness;                                  // Weyl-L
    std::optional<SeparatingEvidence> sampled;                       // Weyl-L: pair with distant images
};

/// Weyl-L only: not diamond-uniform, and no sampled pair had distant images at the budget.
struct Unknown {
    std::string note;
    Rational largest_image_estimate;
};

struct Verdict {
    Space space = Space::WeylH;
    std::variant<WellDefined, NotWellDefined, Unknown> outcome;

    bool well_defined() const { return std::holds_alternative<WellDefined>(outcome); }
    bool not_well_defined() const { return std::holds_alternative<NotWellDefined>(outcome); }
};

struct VerdictBudget {
    std::vector<std::size_t> windows;
    std::size_t offset_factor = default_offset_factor;
};

VerdictBudget default_budget(Space space);

/// Exact: well-defined iff uniform or constant. Non-well-defined verdicts carry
/// a pair of eventually periodic configurations differing on a finite prefix
/// whose images disagree with positive density.
Verdict verdict_weyl_H(const RuleTable& f, const VerdictBudget& budget = default_budget(Space::WeylH));

/// Well-defined if diamond-uniform. Otherwise a sampling semi-test for
/// W_L-constancy: if some sampled pair's images have sliding-L estimate above
/// weyl_l_threshold at the largest window, the verdict is NotWellDefined with
/// separating configurations; if not, Unknown.
Verdict verdict_weyl_L(const RuleTable& f, const VerdictBudget& budget = default_budget(Space::WeylL));

inline const Rational weyl_l_threshold{1, 8};

/// Configurations sampled by the Weyl-L semi-test: a^inf for each letter,
/// (ab)^inf for each ordered pair of distinct letters, then u^inf and v^inf for
/// the witness words.
std::vector<ConfigGenerator> weyl_l_samples(const RuleTable& f, const std::optional<Witness>& witness);

/// Offset bound for the separating configurations at a given window: reaches
/// past the block where the x- and y-parts have length at least 2*window.
std::size_t separating_offset_bound(const RuleTable& f, const Witness& wit, std::size_t window);

// ---------------------------------------------------------------------------
// Lipschitz checks
// ---------------------------------------------------------------------------

using ConfigPair = std::pair<ConfigGenerator, ConfigGenerator>;

/// delta maxd / minf for Weyl-H (uniform rules), (2 delta - 1) maxf / minf for
/// Weyl-L (diamond-uniform rules). Throws std::invalid_argument naming the
/// failed hypothesis otherwise.
Rational lipschitz_constant(const RuleTable& f, Space space);

/// Additive term of the matching proof, divided by the window:
///   Weyl-H: (delta^2 maxd + 2 minf) / ell
///   Weyl-L: (maxf (2 delta^2 - delta + 2) + 2 C) / ell, C = length_defect_bound(f)
Rational lipschitz_slack(const RuleTable& f, Space space, std::size_t window);

struct LipschitzRow {
    std::size_t pair = 0;
    std::size_t window = 0;
    std::size_t max_offset = 0;
    /// Input windows are shorter by the factor minf: an image window of length
    /// ell at offset k <= K is produced by at most floor(ell/minf) input letters
    /// starting at or before ceil(K/minf).
    std::size_t input_window = 0;
    std::size_t input_max_offset = 0;
    Rational input;
    Rational image;
    Rational bound;
    /// bound - image; negative means a violation.
    Rational margin;
};

struct LipschitzReport {
    Space space = Space::WeylH;
    Rational constant;
    std::vector<LipschitzRow> rows;
    std::size_t violations = 0;
};

/// image estimate at (ell, K) <= constant * input estimate at
/// (max(1, floor(ell/minf)), ceil(K/minf)) + slack(ell), for every pair and window.
LipschitzReport lipschitz_check(const RuleTable& f, const std::vector<ConfigPair>& pairs,
                                const std::vector<std::size_t>& windows, const OffsetPolicy& policy, Space space);

struct LevLemmaRow {
    std::size_t length = 0;
    kernels::LevLemmaScan scan;
};

struct LevLemmaReport {
    std::vector<LevLemmaRow> rows;
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    /// Tightest margin over u != v, in half units (doubled distances).
    std::optional<std::int64_t> tightest_doubled_margin;
    std::string tightest_u;
    std::string tightest_v;
};

/// Exhaustive check, for every length 1..max_length and every u, v in A^length, of
///   dL(f*u, f*v) <= maxf (2 delta - 1) dL(u, v) - | |f*u| - |f*v| | / 2.
LevLemmaReport lemma_lev_check(const RuleTable& f, std::size_t max_length);

struct LipHRow {
    std::size_t pair = 0;
    std::size_t window = 0;
    std::size_t offset = 0;
    std::size_t lhs = 0;
    /// d_H(x[m,m+p+delta), y[...]) delta maxd + 2 minf
    std::size_t lemma_bound = 0;
    /// d_H(x[m,m+p), y[...]) delta maxd + delta^2 maxd + 2 minf
    std::size_t proposition_bound = 0;
};

struct LipHReport {
    std::size_t checks = 0;
    std::size_t lemma_violations = 0;
    std::size_t proposition_violations = 0;
    std::optional<std::int64_t> tightest_lemma_margin;
    std::optional<std::int64_t> tightest_proposition_margin;
    std::vector<LipHRow> violating_rows;
};

/// For uniform f, every (pair, window, offset): with m = ceil(k/minf) and
/// p = floor((ell+k)/minf) - (m+1),
///   d_H(F(x)[k,k+ell), F(y)[k,k+ell)) <= d_H(x[m,m+p+delta), y[m,m+p+delta)) delta maxd + 2 minf.
/// Throws std::invalid_argument for non-uniform rules.
LipHReport lemma_lip_H_check(const RuleTable& f, const std::vector<ConfigPair>& pairs,
                             const std::vector<std::size_t>& windows, const std::vector<std::size_t>& offsets);

} // namespace dill
