#include "twd/rules.hpp"

#include <algorithm>

#include "twd/error.hpp"

namespace twd {

std::string_view to_string(Decision d) {
    switch (d) {
        case Decision::Accept: return "accept";
        case Decision::Reject: return "reject";
        case Decision::NonCommit: return "non-commit";
    }
    return "?";
}

Decision parse_decision(std::string_view text) {
    if (text == "accept") return Decision::Accept;
    if (text == "reject") return Decision::Reject;
    if (text == "non-commit") return Decision::NonCommit;
    throw InvalidArgument("unknown decision '" + std::string(text) + "'");
}

std::size_t RuleSet::count(Decision d) const {
    return static_cast<std::size_t>(
        std::count_if(rules.begin(), rules.end(), [d](const Rule& r) { return r.decision == d; }));
}

RuleSet derive_rules(const FormulaSet& dpos, const FormulaSet& dneg, Provenance provenance) {
    RuleSet rs;
    rs.provenance = std::move(provenance);
    for (const auto& p : dpos) {
        if (!dneg.count(p)) rs.rules.push_back({p, Decision::Accept});
    }
    for (const auto& p : dneg) {
        if (!dpos.count(p)) rs.rules.push_back({p, Decision::Reject});
    }
    for (const auto& p : dpos) {
        if (dneg.count(p)) rs.rules.push_back({p, Decision::NonCommit});
    }
    return rs;
}

Decision apply_rules(const RuleSet& rs, std::span<const ValueId> row) {
    bool accept = false;
    bool reject = false;
    bool hold = false;
    for (const auto& r : rs.rules) {
        if (!satisfies(row, r.lhs)) continue;
        switch (r.decision) {
            case Decision::Accept: accept = true; break;
            case Decision::Reject: reject = true; break;
            case Decision::NonCommit: hold = true; break;
        }
    }
    if (accept && !reject && !hold) return Decision::Accept;
    if (reject && !accept && !hold) return Decision::Reject;
    return Decision::NonCommit;
}

Decision apply_rules(const RuleSet& rs, const SetValuedTable& st, ObjectId x) {
    const auto& schema = st.schema();
    if (x >= schema.object_count()) throw InvalidArgument("object index out of range");
    std::vector<ValueId> row(schema.attribute_count(), kNa);
    std::vector<bool> needed(schema.attribute_count(), false);
    for (const auto& r : rs.rules) {
        for (const auto& atom : r.lhs.atoms()) needed.at(atom.attr) = true;
    }
    for (AttrId a = 0; a < schema.attribute_count(); ++a) {
        const auto& cell = st.cell(x, a);
        if (cell.size() == 1) {
            row[a] = cell.front();
        } else if (needed[a]) {
            throw InvalidArgument("rules cannot be applied to object '" + schema.objects[x] +
                                  "': attribute '" + schema.attributes[a].name + "' is not a single value");
        }
    }
    return apply_rules(rs, row);
}

namespace {

std::string_view tag(Decision d) {
    switch (d) {
        case Decision::Accept: return "(A)";
        case Decision::Reject: return "(R)";
        case Decision::NonCommit: return "(N)";
    }
    return "(?)";
}

}  // namespace

std::string render_text(const Schema& schema, const RuleSet& rs) {
    std::string out;
    for (const auto& r : rs.rules) {
        out += std::string(tag(r.decision)) + ' ' + render_formula(schema, r.lhs) + " -> " +
               std::string(to_string(r.decision)) + '\n';
    }
    out += "(N) otherwise -> non-commit\n";
    return out;
}

nlohmann::json render_json(const Schema& schema, const RuleSet& rs) {
    const auto& pv = rs.provenance;
    nlohmann::json j;
    j["method"] = pv.method;
    j["tnorm"] = pv.tnorm ? nlohmann::json(std::string(fuzzy::to_string(*pv.tnorm))) : nlohmann::json(nullptr);
    j["alpha"] = pv.alpha ? nlohmann::json(pv.alpha->to_fraction()) : nlohmann::json(nullptr);
    j["class"] = pv.class_label;
    auto rules = nlohmann::json::array();
    for (const auto& r : rs.rules) {
        rules.push_back({{"lhs", formula_to_json(schema, r.lhs)}, {"decision", std::string(to_string(r.decision))}});
    }
    j["rules"] = std::move(rules);
    j["default"] = "non-commit";
    return j;
}

RuleSet rules_from_json(const Schema& schema, const nlohmann::json& j) {
    RuleSet rs;
    auto& pv = rs.provenance;
    pv.method = j.at("method").get<std::string>();
    if (!j.at("tnorm").is_null()) pv.tnorm = fuzzy::parse_tnorm(j.at("tnorm").get<std::string>());
    if (!j.at("alpha").is_null()) pv.alpha = Degree::parse(j.at("alpha").get<std::string>());
    pv.class_label = j.at("class").get<std::string>();
    if (j.at("default").get<std::string>() != "non-commit") throw InvalidArgument("default decision must be non-commit");
    for (const auto& item : j.at("rules")) {
        rs.rules.push_back({formula_from_json(schema, item.at("lhs")), parse_decision(item.at("decision").get<std::string>())});
    }
    return rs;
}

}  // namespace twd
