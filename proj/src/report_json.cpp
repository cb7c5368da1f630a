#include "dill/report_json.hpp"

#include "dill/rule_file.hpp"

namespace dill {

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const LadderReport& ladder)
{
    Json entries = Json::array();
    for (const auto& e : ladder.entries)
        entries.push_back({{"ell", e.window}, {"K", e.max_offset}, {"value", to_json(e.value)}});
    return {{"base", std::string(to_string(ladder.base))},
            {"policy", ladder.policy},
            {"entries", std::move(entries)},
            {"non_increasing", ladder.non_increasing()},
            {"note", std::string(LadderReport::disclaimer)}};
}

Json to_json(const Cycle& cycle, const RuleTable& f)
{
    DeBruijnGraph g(f);
    return {{"mean", to_json(cycle.mean())},
            {"length", cycle.length()},
            {"weight", cycle.weight},
            {"word", f.alphabet().decode(g.path_word(cycle.base, cycle.edges))}};
}

Json to_json(const Witness& witness, const Alphabet& alphabet)
{
    return {{"u", alphabet.decode(witness.u)},
            {"v", alphabet.decode(witness.v)},
            {"alpha", witness.alpha},
            {"shared", witness.shared}};
}

namespace {

Json evidence_json(const SeparatingEvidence& e)
{
    return {{"x", e.x_text}, {"y", e.y_text}, {"input", to_json(e.input)}, {"image", to_json(e.image)}};
}

} // namespace

Json to_json(const Verdict& verdict, const RuleTable& f)
{
    Json out = {{"space", std::string(to_string(verdict.space))}};
    if (const auto* wd = std::get_if<WellDefined>(&verdict.outcome)) {
        out["verdict"] = "WellDefined";
        out["reason"] = std::string(to_string(wd->reason));
    } else if (const auto* nwd = std::get_if<NotWellDefined>(&verdict.outcome)) {
        out["verdict"] = "NotWellDefined";
        out["evidence"] = evidence_json(nwd->evidence);
        if (nwd->periodic_separation) {
            const auto& s = *nwd->periodic_separation;
            Json bounds = Json::array();
            for (const auto& e : nwd->evidence.image.entries)
                bounds.push_back({{"ell", e.window}, {"value", to_json(s.image_lower_bound(e.window))}});
            out["periodic_separation"] = {{"prefix_x", f.alphabet().decode(s.prefix_x)},
                                          {"prefix_y", f.alphabet().decode(s.prefix_y)},
                                          {"period", f.alphabet().decode(s.period)},
                                          {"image_period", s.image_period},
                                          {"tail_start", s.tail_start},
                                          {"image_lower_bound", std::move(bounds)}};
        }
        if (nwd->witness)
            out["witness"] = to_json(*nwd->witness, f.alphabet());
        if (nwd->sampled)
            out["sampled"] = evidence_json(*nwd->sampled);
    } else {
        const auto& u = std::get<Unknown>(verdict.outcome);
        out["verdict"] = "Unknown";
        out["note"] = u.note;
        out["largest_image_estimate"] = to_json(u.largest_image_estimate);
    }
    return out;
}

Json classify_report(const RuleTable& f, const ClassifyOptions& options)
{
    const Alphabet& a = f.alphabet();
    Norms n = norms(f);
    Json report;
    report["rule"] = {{"alphabet", a.symbols()},
                      {"diameter", f.diameter()},
                      {"windows", f.window_count()},
                      {"digest", rule_digest(f)}};
    report["norms"] = {{"minf", n.minf}, {"maxf", n.maxf}, {"uniform", n.uniform()}};
    if (n.uniform()) {
        DeltaNorms d = delta_norms(f);
        report["delta_norms"] = {{"mind", d.mind}, {"maxd", d.maxd}};
    } else {
        report["delta_norms"] = nullptr;
    }

    CycleMeans means = cycle_means(f);
    report["cycle_means"] = {
        {"min", to_json(means.min, f)}, {"max", to_json(means.max, f)}, {"equal", means.equal()}};

    ConstancyDecision constancy = decide_constant(f);
    if (const auto* c = std::get_if<Constant>(&constancy)) {
        report["constant"] = {{"constant", true}, {"period", a.decode(c->period)}};
    } else {
        const auto& nc = std::get<NotConstant>(constancy);
        report["constant"] = {{"constant", false},
                              {"x", nc.x().describe(a)},
                              {"y", nc.y().describe(a)},
                              {"first_difference", nc.position}};
    }

    report["diamond_uniform"] = means.equal();
    if (means.equal()) {
        report["witness"] = nullptr;
        report["length_defect_bound"] = to_json(length_defect_bound(f));
    } else {
        report["witness"] = to_json(witness_pair(f, means.min, means.max), a);
        report["length_defect_bound"] = nullptr;
    }

    Json lipschitz;
    lipschitz["WeylH"] = n.uniform() ? to_json(lipschitz_constant(f, Space::WeylH)) : Json(nullptr);
    lipschitz["WeylL"] = means.equal() ? to_json(lipschitz_constant(f, Space::WeylL)) : Json(nullptr);
    report["lipschitz_constant"] = std::move(lipschitz);

    report["verdicts"] = {{"WeylH", to_json(verdict_weyl_H(f, options.weyl_h), f)},
                          {"WeylL", to_json(verdict_weyl_L(f, options.weyl_l), f)}};
    return report;
}

} // namespace dill
