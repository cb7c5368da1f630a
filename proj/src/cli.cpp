#include "dill/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <set>

#include "dill/classify.hpp"
#include "dill/distances.hpp"
#include "dill/proptests.hpp"
#include "dill/report_json.hpp"
#include "dill/reproduce.hpp"
#include "dill/rule_file.hpp"

namespace dill::cli {

namespace {

struct Options {
    std::string first;
    std::string second;
    std::string metric = "hamming";
    std::string alphabet;
    std::string rule_path;
    std::string space = "both";
    std::string suite = "all";
    std::string example;
    std::vector<std::size_t> windows;
    std::optional<std::size_t> max_offset;
    std::size_t budget = 64;
    std::uint64_t seed = 1;
    std::size_t rules = proptests::default_theorem_rules;
    bool json = false;
    bool scan = false;
    bool besicovitch = false;
};

std::string sorted_letters(const std::string& a, const std::string& b)
{
    std::set<char> letters(a.begin(), a.end());
    letters.insert(b.begin(), b.end());
    std::string s(letters.begin(), letters.end());
    return s.empty() ? "a" : s;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_dist(const Options& o, std::ostream& out)
{
    std::string value;
    if (o.metric == "cantor") {
        Alphabet a(o.alphabet.empty() ? infer_alphabet({o.first, o.second}) : o.alphabet);
        CantorDistance d = cantor(parse_config(o.first, a), parse_config(o.second, a), o.budget);
        value = d.to_string();
    } else {
        Alphabet a(o.alphabet.empty() ? sorted_letters(o.first, o.second) : o.alphabet);
        Word u = a.encode(o.first), v = a.encode(o.second);
        if (o.metric == "hamming")
            value = std::to_string(hamming(u, v));
        else if (o.metric == "levenshtein")
            value = to_string(levenshtein(u, v));
        else
            throw std::invalid_argument("unknown metric '" + o.metric + "' (hamming|levenshtein|cantor)");
    }
    if (o.json)
        print_json(out, {{"metric", o.metric}, {"u", o.first}, {"v", o.second}, {"value", value}});
    else
        out << value << "\n";
    return exit_ok;
}

int cmd_pseudo(const Options& o, std::ostream& out)
{
    std::optional<RuleTable> f;
    if (!o.rule_path.empty())
        f = load_rule_file(o.rule_path);
    Alphabet a(f ? f->alphabet().symbols()
                 : (o.alphabet.empty() ? infer_alphabet({o.first, o.second}) : o.alphabet));
    ConfigGenerator x = parse_config(o.first, a), y = parse_config(o.second, a);
    if (f) {
        x = image(*f, x);
        y = image(*f, y);
    }
    const Base base = parse_base(o.metric);
    std::vector<std::size_t> windows = o.windows.empty() ? std::vector<std::size_t>{8, 16, 32, 64} : o.windows;

    if (o.besicovitch) {
        Json rows = Json::array();
        for (std::size_t ell : windows) {
            Rational v = besicovitch_estimate(base, x, y, ell);
            if (o.json)
                rows.push_back({{"ell", ell}, {"value", to_json(v)}});
            else
                out << ell << "\t" << to_string(v) << "\n";
        }
        if (o.json)
            print_json(out, {{"base", std::string(to_string(base))}, {"anchored", true}, {"entries", rows}});
        return exit_ok;
    }

    const OffsetPolicy policy =
        o.max_offset ? OffsetPolicy::fixed(*o.max_offset) : OffsetPolicy::proportional(default_offset_factor);
    LadderReport ladder = weyl_ladder(base, x, y, windows, policy);
    if (o.json)
        print_json(out, to_json(ladder));
    else
        out << to_tsv(ladder);
    return exit_ok;
}

VerdictBudget budget_for(const Options& o, Space space)
{
    VerdictBudget b = default_budget(space);
    if (!o.windows.empty())
        b.windows = o.windows;
    return b;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    RuleTable f = load_rule_file(o.rule_path);
    ClassifyOptions opts{budget_for(o, Space::WeylH), budget_for(o, Space::WeylL)};
    Json report = classify_report(f, opts);
    if (o.space != "both") {
        Space s = parse_space(o.space);
        Json verdicts = report["verdicts"];
        report["verdicts"] = Json::object();
        report["verdicts"][std::string(to_string(s))] = verdicts[std::string(to_string(s))];
    }
    print_json(out, report);
    return exit_ok;
}

int cmd_witness(const Options& o, std::ostream& out)
{
    RuleTable f = load_rule_file(o.rule_path);
    auto decision = decide_diamond_uniform(f);
    Json j;
    if (const auto* du = std::get_if<DiamondUniform>(&decision)) {
        j = {{"diamond_uniform", true}, {"mean", to_json(du->mean)}, {"length_defect_bound", to_json(length_defect_bound(f))}};
    } else {
        const auto& nd = std::get<NotDiamondUniform>(decision);
        Witness w = witness_pair(f, nd.low, nd.high);
        j = {{"diamond_uniform", false},
             {"low_cycle", to_json(nd.low, f)},
             {"high_cycle", to_json(nd.high, f)},
             {"witness", to_json(w, f.alphabet())}};
    }
    if (o.json) {
        print_json(out, j);
    } else if (j["diamond_uniform"].get<bool>()) {
        out << "diamond-uniform, cycle mean " << j["mean"].get<std::string>() << "\n";
    } else {
        out << "u\t" << j["witness"]["u"].get<std::string>() << "\n"
            << "v\t" << j["witness"]["v"].get<std::string>() << "\n"
            << "alpha\t" << j["witness"]["alpha"].get<std::int64_t>() << "\n";
    }
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    std::vector<std::string> suites;
    if (o.suite == "all")
        suites = proptests::suite_names();
    else
        suites.push_back(o.suite);
    bool ok = true;
    Json reports = Json::array();
    for (const auto& name : suites) {
        proptests::SuiteReport r = proptests::run_suite(name, o.seed, o.rules);
        ok = ok && r.passed();
        if (o.json) {
            Json props = Json::array();
            for (const auto& p : r.results)
                props.push_back({{"name", p.name}, {"passed", p.passed}, {"cases", p.cases}, {"message", p.message}});
            reports.push_back({{"suite", r.suite}, {"seed", r.seed}, {"passed", r.passed()}, {"properties", props},
                               {"reproduce", r.reproduce}});
        } else {
            out << r.text();
        }
    }
    if (o.json)
        print_json(out, reports);
    return ok ? exit_ok : exit_failed_check;
}

int cmd_reproduce(const Options& o, std::ostream& out)
{
    ReproduceOptions opts;
    if (!o.windows.empty())
        opts.window = o.windows.front();
    opts.max_offset = o.max_offset;
    opts.scan = o.scan;
    ReproduceReport r = reproduce(o.example, opts);
    if (o.json) {
        Json checks = Json::array();
        for (const auto& c : r.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        print_json(out, {{"id", r.id}, {"passed", r.passed()}, {"checks", checks}, {"data", r.data}});
    } else {
        out << r.text();
    }
    return r.passed() ? exit_ok : exit_failed_check;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dill maps: distances, sliding pseudo-metric estimates and well-definedness verdicts", "dill"};
    app.require_subcommand(1);
    Options o;

    auto* dist = app.add_subcommand("dist", "Distance between two words (cantor: two configurations)");
    dist->add_option("u", o.first, "First word or configuration")->required();
    dist->add_option("v", o.second, "Second word or configuration")->required();
    dist->add_option("--metric", o.metric, "hamming | levenshtein | cantor")->capture_default_str();
    dist->add_option("--budget", o.budget, "Prefix budget for the Cantor distance")->capture_default_str();
    dist->add_option("--alphabet", o.alphabet, "Alphabet symbols (default: letters that occur)");
    dist->add_flag("--json", o.json, "JSON output");

    auto* pseudo = app.add_subcommand("pseudo", "Sliding-window estimates of the Weyl pseudo-metrics");
    pseudo->add_option("x", o.first, "Configuration (periodic:, evp:, word:, ramp:)")->required();
    pseudo->add_option("y", o.second, "Configuration")->required();
    pseudo->add_option("--metric", o.metric, "hamming | levenshtein")->capture_default_str();
    pseudo->add_option("--ell", o.windows, "Window lengths, increasing")->delimiter(',');
    pseudo->add_option("--K", o.max_offset, "Offset bound (default 4*ell)");
    pseudo->add_option("--rule", o.rule_path, "Compare the images under this rule");
    pseudo->add_option("--alphabet", o.alphabet, "Alphabet symbols");
    pseudo->add_flag("--besicovitch", o.besicovitch, "Offset fixed at 0");
    pseudo->add_flag("--json", o.json, "JSON output");

    auto* classify = app.add_subcommand("classify", "Norms, cycle means and both verdicts for a rule file (JSON)");
    classify->add_option("rule", o.rule_path, "Rule file")->required();
    classify->add_option("--space", o.space, "WeylH | WeylL | both")->capture_default_str();
    classify->add_option("--ell", o.windows, "Evidence window lengths")->delimiter(',');
    classify->add_flag("--json", o.json, "Accepted for symmetry; output is always JSON");

    auto* witness = app.add_subcommand("witness", "Witness pair against diamond-uniformity");
    witness->add_option("rule", o.rule_path, "Rule file")->required();
    witness->add_flag("--json", o.json, "JSON output");

    auto* verify = app.add_subcommand("verify", "Run the property suites");
    verify->add_option("--suite", o.suite, "distances | dillmaps | pseudometrics | theorems | all")
        ->capture_default_str();
    verify->add_option("--seed", o.seed, "Seed")->capture_default_str();
    verify->add_option("--rules", o.rules, "Number of sampled rules for the theorem suite")->capture_default_str();
    verify->add_flag("--json", o.json, "JSON output");

    auto* repro = app.add_subcommand("reproduce", "Recompute a worked example and check its stated values");
    repro->add_option("id", o.example, "Example id")->required();
    repro->add_option("--ell", o.windows, "Window length")->delimiter(',');
    repro->add_option("--K", o.max_offset, "Offset bound");
    repro->add_flag("--scan", o.scan, "Scan every offset up to the bound");
    repro->add_flag("--json", o.json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (dist->parsed())
            return cmd_dist(o, out);
        if (pseudo->parsed())
            return cmd_pseudo(o, out);
        if (classify->parsed())
            return cmd_classify(o, out);
        if (witness->parsed())
            return cmd_witness(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        return cmd_reproduce(o, out);
    } catch (const RuleParseError& e) {
        err << "rule file error: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return exit_usage;
}

} // namespace dill::cli
