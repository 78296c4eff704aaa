#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twd/degree.hpp"
#include "twd/fuzzy.hpp"
#include "twd/language.hpp"
#include "twd/table.hpp"

namespace twd {

enum class Decision { Accept, Reject, NonCommit };

std::string_view to_string(Decision d);  // "accept" | "reject" | "non-commit"
Decision parse_decision(std::string_view text);

struct Provenance {
    std::string method;
    std::optional<fuzzy::TNormKind> tnorm;
    std::optional<Degree> alpha;
    std::string class_label;
};

struct Rule {
    Formula lhs;
    Decision decision;
};

// Accept rules first, then Reject, then NonCommit; formula order inside each group.
struct RuleSet {
    std::vector<Rule> rules;
    Provenance provenance;

    std::size_t count(Decision d) const;
};

// dpos - dneg accept, dneg - dpos reject, and the overlap becomes explicit non-commit.
RuleSet derive_rules(const FormulaSet& dpos, const FormulaSet& dneg, Provenance provenance = {});
inline RuleSet derive_rules(const DescriptionRegions& r, Provenance provenance = {}) {
    return derive_rules(r.dpos, r.dneg, std::move(provenance));
}

// Matching only Accept rules accepts, only Reject rules rejects; anything else is non-commit.
Decision apply_rules(const RuleSet& rs, std::span<const ValueId> row);
// Throws InvalidArgument when a cell a rule reads is not a single value.
Decision apply_rules(const RuleSet& rs, const SetValuedTable& st, ObjectId x);

std::string render_text(const Schema& schema, const RuleSet& rs);
nlohmann::json render_json(const Schema& schema, const RuleSet& rs);
RuleSet rules_from_json(const Schema& schema, const nlohmann::json& j);

}  // namespace twd
