#include "dill/reproduce.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "dill/classify.hpp"
#include "dill/distances.hpp"
#include "dill/kernels.hpp"
#include "dill/rule_file.hpp"

namespace dill {

bool ReproduceReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.passed; });
}

std::string ReproduceReport::text() const
{
    std::ostringstream out;
    out << "reproduce " << id << "\n";
    for (const auto& n : notes)
        out << "  " << n << "\n";
    for (const auto& c : checks)
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    out << (passed() ? "all checks passed" : "some checks FAILED") << "\n";
    return out.str();
}

namespace {

std::string list_ids()
{
    std::string s;
    for (const auto& id : example_ids())
        s += (s.empty() ? "" : ", ") + id;
    return s;
}

std::vector<std::size_t> powers_of_two(std::size_t from, std::size_t to)
{
    std::vector<std::size_t> out;
    for (std::size_t w = from; w <= to; w *= 2)
        out.push_back(w);
    return out;
}

Word tail_from(const Word& w, std::size_t start) { return Word(w.begin() + static_cast<std::ptrdiff_t>(start), w.end()); }

// ---------------------------------------------------------------------------

ReproduceReport fibonacci_weyl(const ReproduceOptions& opt)
{
    ReproduceReport rep;
    rep.id = "fibonacci-weyl";
    const RuleTable f = rules::fibonacci();
    const ConfigGenerator x = periodic(Word{0});
    const ConfigGenerator y = explicit_config(Word{1}, 0);
    rep.notes.push_back("x = a^inf, y = b a^inf, F = Fibonacci substitution a -> ab, b -> a");
    rep.notes.push_back("F(x) = (ab)^inf and F(y) = a (ab)^inf disagree at every position >= 1");

    const auto windows = opt.window ? std::vector<std::size_t>{*opt.window} : powers_of_two(4, 256);
    const ConfigGenerator fx = image(f, x), fy = image(f, y);
    Json rows = Json::array();
    bool images_ok = true, inputs_ok = true;
    for (std::size_t ell : windows) {
        const std::size_t k = opt.max_offset.value_or(default_offset_factor * ell);
        Rational img = sliding_estimate(Base::Hamming, fx, fy, ell, k).value;
        Rational in = sliding_estimate(Base::Hamming, x, y, ell, k).value;
        images_ok = images_ok && img == Rational(1);
        inputs_ok = inputs_ok && in <= Rational(1, static_cast<std::int64_t>(ell));
        rows.push_back({{"ell", ell}, {"K", k}, {"input", to_json(in)}, {"image", to_json(img)}});
        rep.notes.push_back("ell=" + std::to_string(ell) + " K=" + std::to_string(k) + " input=" + to_string(in) +
                            " image=" + to_string(img));
    }
    rep.checks.push_back({"image estimate", images_ok, "sliding-H estimate of (F(x), F(y)) equals 1 at every ell"});
    rep.checks.push_back({"input estimate", inputs_ok, "sliding-H estimate of (x, y) is at most 1/ell"});
    rep.data = {{"id", rep.id}, {"rows", std::move(rows)}};
    return rep;
}

ReproduceReport tau011_weyl_l(const ReproduceOptions& opt)
{
    ReproduceReport rep;
    rep.id = "tau011-weylL";
    rep.notes.push_back("tau: 0 -> 0, 1 -> 11; x = prod 0^n 1^n, y = prod 0^(n+1) 1^(n-1)");
    rep.notes.push_back("offset k = sum_{i<=ell}(i+1) + sum_{i<=ell} 2(i-1)");
    const auto windows = opt.window ? std::vector<std::size_t>{*opt.window} : powers_of_two(4, 32);
    const Alphabet& a = rules::tau011().alphabet();

    Json rows = Json::array();
    bool windows_ok = true, bound_ok = true, scan_ok = true;
    for (std::size_t ell : windows) {
        Tau011Window w = tau011_window(ell);
        windows_ok = windows_ok && w.image_x == repeat(1, ell) && w.image_y == repeat(0, ell) &&
                     w.distance == HalfInt::from_integer(static_cast<std::int64_t>(ell));
        const std::size_t k = opt.max_offset.value_or(w.offset);
        Tau011InputCheck in = tau011_input_check(ell, k);
        bound_ok = bound_ok && in.violations == 0;
        Json row = {{"ell", ell},
                    {"k", w.offset},
                    {"image_x", a.decode(w.image_x)},
                    {"image_y", a.decode(w.image_y)},
                    {"d_L", to_string(w.distance)},
                    {"input_K", k},
                    {"input_estimate", to_json(in.estimate)},
                    {"input_bound_violations", in.violations}};
        rep.notes.push_back("ell=" + std::to_string(ell) + " k=" + std::to_string(w.offset) + " F(x)=" +
                            a.decode(w.image_x) + " F(y)=" + a.decode(w.image_y) + " d_L=" + to_string(w.distance) +
                            " input estimate at K=" + std::to_string(k) + ": " + to_string(in.estimate));
        if (opt.scan) {
            const RuleTable f = rules::tau011();
            auto scan = sliding_estimate(Base::Levenshtein, image(f, tau011_x()), image(f, tau011_y()), ell, k);
            scan_ok = scan_ok && scan.value == Rational(1);
            row["scan_estimate"] = to_json(scan.value);
            row["scan_argmax"] = scan.argmax;
        }
        rows.push_back(std::move(row));
    }
    rep.checks.push_back({"image windows", windows_ok, "F(x)[k,k+ell) = 1^ell, F(y)[k,k+ell) = 0^ell, d_L = ell"});
    rep.checks.push_back(
        {"input bound", bound_ok, "d_H(x[k,k+ell), y[k,k+ell))/ell <= 2/(m+p+1) + 2/ell at every offset checked"});
    if (opt.scan)
        rep.checks.push_back({"offset scan", scan_ok, "sliding-L estimate of the images equals 1"});
    rep.data = {{"id", rep.id}, {"rows", std::move(rows)}};
    return rep;
}

ReproduceReport diamond_example(const ReproduceOptions& opt)
{
    ReproduceReport rep;
    rep.id = "diamond-example";
    const RuleTable f = rules::diamond_example();
    const RuleTable expected = parse_rule("alphabet: ab\ndiameter: 2\naa -> ab\nab -> a\nba -> bab\nbb -> ba\n");
    rep.notes.push_back("f(aa) = ab, f(bb) = ba, f(ab) = a, f(ba) = bab");
    rep.checks.push_back({"rule table", f == expected, "table matches the four stated images"});

    // F(x) = (ab)^inf when x starts with a, (ba)^inf otherwise.
    const std::size_t n = opt.window.value_or(64);
    bool images_ok = true;
    for (std::uint64_t i = 0; i < 256; ++i) {
        Word prefix = kernels::word_from_index(i, 2, 8);
        for (Letter fill : {Letter{0}, Letter{1}}) {
            Word img = image_prefix(f, explicit_config(prefix, fill), n);
            Word want = periodic(prefix[0] == 0 ? Word{0, 1} : Word{1, 0}).prefix(n);
            images_ok = images_ok && img == want;
        }
    }
    rep.checks.push_back({"images", images_ok, "F(x) is (ab)^inf or (ba)^inf by first letter, all 8-letter prefixes"});

    Norms nm = norms(f);
    bool constant = std::holds_alternative<Constant>(decide_constant(f));
    rep.checks.push_back({"neither constant nor uniform", !constant && !nm.uniform(),
                          "minf = " + std::to_string(nm.minf) + ", maxf = " + std::to_string(nm.maxf)});
    CycleMeans means = cycle_means(f);
    rep.checks.push_back({"diamond-uniform", means.equal() && means.min.mean() == Rational(2),
                          "cycle means " + to_string(means.min.mean()) + " and " + to_string(means.max.mean())});

    const auto windows = powers_of_two(8, 64);
    const OffsetPolicy policy =
        opt.max_offset ? OffsetPolicy::fixed(*opt.max_offset) : OffsetPolicy::proportional(default_offset_factor);
    LadderReport ladder =
        weyl_ladder(Base::Levenshtein, image(f, periodic(Word{0})), image(f, periodic(Word{1})), windows, policy);
    bool ladder_ok = true;
    for (const auto& e : ladder.entries)
        ladder_ok = ladder_ok && e.value <= Rational(1, static_cast<std::int64_t>(e.window));
    rep.checks.push_back({"images W_L-close", ladder_ok, "sliding-L estimate of ((ab)^inf, (ba)^inf) is at most 1/ell"});

    Verdict h = verdict_weyl_H(f), l = verdict_weyl_L(f);
    rep.checks.push_back({"verdicts", h.not_well_defined() && l.well_defined(),
                          "WeylH NotWellDefined, WeylL WellDefined"});
    rep.data = {{"id", rep.id}, {"ladder", to_json(ladder)}, {"WeylH", to_json(h, f)}, {"WeylL", to_json(l, f)}};
    return rep;
}

ReproduceReport xor_compose(const ReproduceOptions&)
{
    ReproduceReport rep;
    rep.id = "xor-compose";
    const RuleTable composed = compose_sub_ca(rules::fibonacci(), rules::xor_ca());
    const Alphabet& a = composed.alphabet();
    Json table = Json::object();
    for (std::size_t w = 0; w < composed.window_count(); ++w) {
        std::string window = a.decode(composed.decode_window(w));
        std::string img = a.decode(composed.image(w));
        rep.notes.push_back("tau o f(" + window + ") = " + img);
        table[window] = img;
    }
    const bool ok = a.decode(composed.image(a.encode("aa"))) == "ab" && a.decode(composed.image(a.encode("bb"))) == "ab" &&
                    a.decode(composed.image(a.encode("ab"))) == "a" && a.decode(composed.image(a.encode("ba"))) == "a";
    rep.checks.push_back({"composed table", ok, "aa, bb -> ab and ab, ba -> a"});
    rep.data = {{"id", rep.id}, {"table", std::move(table)}, {"rule", format_rule(composed)}};
    return rep;
}

ReproduceReport shift_jump_example(const ReproduceOptions& opt)
{
    ReproduceReport rep;
    rep.id = "shift-jump";
    rep.notes.push_back("F(shift x) = shift^s(x) F(x) with s(x) = |f(x[0,delta))|");
    const std::size_t n = opt.window.value_or(512);
    const std::vector<std::pair<std::string, RuleTable>> named{{"fibonacci", rules::fibonacci()},
                                                               {"xor", rules::xor_ca()},
                                                               {"diamond", rules::diamond_example()},
                                                               {"tau011", rules::tau011()},
                                                               {"xor-then-fibonacci", rules::xor_then_fibonacci()}};
    std::mt19937_64 rng(2023);
    Json rows = Json::array();
    bool all_ok = true;
    for (const auto& [name, f] : named) {
        std::size_t checked = 0;
        bool ok = true;
        for (int c = 0; c < 8; ++c) {
            Word prefix(std::uniform_int_distribution<std::size_t>(0, 6)(rng));
            Word period(std::uniform_int_distribution<std::size_t>(1, 4)(rng));
            for (auto& l : prefix)
                l = static_cast<Letter>(rng() % f.alphabet().size());
            for (auto& l : period)
                l = static_cast<Letter>(rng() % f.alphabet().size());
            ConfigGenerator x = eventually_periodic(prefix, period);
            const std::size_t s = shift_jump(f, x);
            ok = ok && image_prefix(f, shift(x, 1), n) == tail_from(image_prefix(f, x, n + s), s);
            ++checked;
        }
        all_ok = all_ok && ok;
        rows.push_back({{"rule", name}, {"configurations", checked}, {"n", n}, {"ok", ok}});
        rep.notes.push_back(name + ": " + std::to_string(checked) + " configurations, prefixes of length " +
                            std::to_string(n));
    }
    rep.checks.push_back({"shift commutation", all_ok, "image prefixes agree after the jump for every sample"});
    rep.data = {{"id", rep.id}, {"rows", std::move(rows)}};
    return rep;
}

} // namespace

UnknownExample::UnknownExample(std::string_view id)
    : std::invalid_argument("unknown example '" + std::string(id) + "'; valid ids: " + list_ids())
{
}

const std::vector<std::string>& example_ids()
{
    static const std::vector<std::string> ids{"fibonacci-weyl", "tau011-weylL", "diamond-example", "xor-compose",
                                              "shift-jump"};
    return ids;
}

ReproduceReport reproduce(std::string_view id, const ReproduceOptions& options)
{
    if (id == "fibonacci-weyl")
        return fibonacci_weyl(options);
    if (id == "tau011-weylL")
        return tau011_weyl_l(options);
    if (id == "diamond-example")
        return diamond_example(options);
    if (id == "xor-compose")
        return xor_compose(options);
    if (id == "shift-jump")
        return shift_jump_example(options);
    throw UnknownExample(id);
}

// ---------------------------------------------------------------------------

ConfigGenerator tau011_x() { return ramp({1, 0, 1, 0}); }
ConfigGenerator tau011_y() { return ramp({1, 1, 1, -1}); }

std::size_t tau011_offset(std::size_t window)
{
    std::size_t k = 0;
    for (std::size_t i = 1; i <= window; ++i)
        k += (i + 1) + 2 * (i - 1);
    return k;
}

Tau011Window tau011_window(std::size_t window)
{
    const RuleTable f = rules::tau011();
    Tau011Window w;
    w.window = window;
    w.offset = tau011_offset(window);
    w.image_x = tail_from(image_prefix(f, tau011_x(), w.offset + window), w.offset);
    w.image_y = tail_from(image_prefix(f, tau011_y(), w.offset + window), w.offset);
    w.distance = levenshtein(w.image_x, w.image_y);
    return w;
}

Tau011InputCheck tau011_input_check(std::size_t window, std::size_t max_offset)
{
    Tau011InputCheck out;
    out.window = window;
    out.max_offset = max_offset;
    const Word x = tau011_x().prefix(max_offset + window);
    const Word y = tau011_y().prefix(max_offset + window);
    const auto profile = kernels::window_profile(Base::Hamming, x, y, window, max_offset);
    const auto ell = static_cast<std::int64_t>(window);
    auto s = [](std::size_t j) { return j * (j + 1); };
    std::optional<Rational> tightest;
    std::uint64_t worst = 0;
    for (std::size_t k = 0; k <= max_offset; ++k) {
        std::size_t p = 0;
        while (s(p) < k)
            ++p;
        std::size_t m = 0;
        while (s(m + 1) <= k + window)
            ++m;
        const Rational bound = Rational(2, static_cast<std::int64_t>(m + p + 1)) + Rational(2, ell);
        const Rational value(static_cast<std::int64_t>(profile[k] / 2), ell);
        if (value > bound)
            ++out.violations;
        tightest = std::min(tightest.value_or(bound - value), bound - value);
        worst = std::max(worst, profile[k]);
        ++out.offsets;
    }
    out.estimate = Rational(static_cast<std::int64_t>(worst / 2), ell);
    out.tightest_margin = *tightest;
    return out;
}

} // namespace dill
