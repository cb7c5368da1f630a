#pragma once

#include <json.hpp>

#include "dill/classify.hpp"
#include "dill/pseudometrics.hpp"
#include "dill/rational.hpp"

namespace dill {

/// Key order is insertion order, so serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

/// Rationals as "num/den" text (or "num" when integral); never floating point.
Json to_json(const Rational& r);
Json to_json(const LadderReport& ladder);
Json to_json(const Cycle& cycle, const RuleTable& f);
Json to_json(const Witness& witness, const Alphabet& alphabet);
Json to_json(const Verdict& verdict, const RuleTable& f);

struct ClassifyOptions {
    VerdictBudget weyl_h = default_budget(Space::WeylH);
    VerdictBudget weyl_l = default_budget(Space::WeylL);
};

/// Everything `dill classify` prints: rule summary, norms, delta-norms for
/// uniform rules, cycle means, constancy, diamond-uniformity, both verdicts.
Json classify_report(const RuleTable& f, const ClassifyOptions& options = {});

} // namespace dill
