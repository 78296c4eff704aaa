#include "twd/satisfiability_twd.hpp"

#include <algorithm>

#include "twd/error.hpp"

namespace twd {

Degree sat_degree(const SetValuedTable& st, ObjectId x, const Formula& p, TNormKind kind) {
    const auto& schema = st.schema();
    if (x >= schema.object_count()) throw InvalidArgument("object index out of range");
    std::vector<Degree> parts;
    parts.reserve(p.size());
    for (const auto& atom : p.atoms()) {
        if (atom.attr >= schema.attribute_count()) throw InvalidArgument("attribute index out of range");
        if (atom.value == kNa) throw InvalidArgument("NA atoms have no satisfiability degree");
        const auto& cell = st.cell(x, atom.attr);
        bool hit = std::binary_search(cell.begin(), cell.end(), atom.value);
        parts.push_back(hit ? Degree(1, static_cast<std::int64_t>(cell.size())) : Degree::zero());
    }
    return fuzzy::tnorm(kind, parts);
}

SatProfile sat_profile(const SetValuedTable& st, const Formula& p, TNormKind kind) {
    SatProfile out{p, kind, {}};
    out.degrees.reserve(st.schema().object_count());
    for (ObjectId x = 0; x < st.schema().object_count(); ++x) out.degrees.push_back(sat_degree(st, x, p, kind));
    return out;
}

ObjectSet alpha_meaning_set(const SatProfile& profile, const Degree& alpha) {
    ObjectSet out;
    for (ObjectId x = 0; x < profile.degrees.size(); ++x) {
        if (profile.degrees[x] >= alpha) out.insert(x);
    }
    return out;
}

ObjectSet alpha_meaning_set(const SetValuedTable& st, const Formula& p, const Degree& alpha, TNormKind kind) {
    return alpha_meaning_set(sat_profile(st, p, kind), alpha);
}

DescriptionRegions description_regions_alpha_meaning(const SetValuedTable& st, const AttrSet& attrs,
                                                     const Degree& alpha, const ObjectSet& x, TNormKind kind,
                                                     std::uint64_t max_formulas) {
    const auto& schema = st.schema();
    schema.check_objects(x);
    auto xc = schema.complement(x);
    DescriptionRegions r;
    for (auto& p : enumerate_cdl(schema, attrs, Mode::Strict, max_formulas)) {
        auto m = alpha_meaning_set(st, p, alpha, kind);
        if (m.empty()) continue;
        if (std::includes(x.begin(), x.end(), m.begin(), m.end())) {
            r.dpos.insert(std::move(p));
        } else if (std::includes(xc.begin(), xc.end(), m.begin(), m.end())) {
            r.dneg.insert(std::move(p));
        }
    }
    return r;
}

namespace {

void check_class(const SatProfile& profile, const ObjectSet& x_class) {
    if (!x_class.empty() && *x_class.rbegin() >= profile.degrees.size()) {
        throw InvalidArgument("object index out of range");
    }
}

}  // namespace

Confidence confidence(const SatProfile& profile, const ObjectSet& x_class) {
    check_class(profile, x_class);
    if (profile.degrees.empty()) throw InvalidArgument("confidence over an empty table");
    const auto kind = profile.kind;
    std::vector<Degree> into_x, into_xc;
    for (ObjectId x = 0; x < profile.degrees.size(); ++x) {
        auto in = x_class.count(x) ? Degree::one() : Degree::zero();
        into_x.push_back(fuzzy::implication(kind, profile.degrees[x], in));
        into_xc.push_back(fuzzy::implication(kind, profile.degrees[x], in.complement()));
    }
    auto to_x = fuzzy::tnorm(kind, into_x);
    auto to_xc = fuzzy::tnorm(kind, into_xc);
    return {profile.formula, fuzzy::tnorm(kind, to_x, fuzzy::negate(to_xc)),
            fuzzy::tnorm(kind, to_xc, fuzzy::negate(to_x)), x_class};
}

Confidence confidence_closed_form(const SatProfile& profile, const ObjectSet& x_class) {
    check_class(profile, x_class);
    Degree ac, rc;
    if (profile.kind == TNormKind::Min) {
        Degree max_in = Degree::zero(), max_out = Degree::zero();
        for (ObjectId x = 0; x < profile.degrees.size(); ++x) {
            auto& m = x_class.count(x) ? max_in : max_out;
            m = std::max(m, profile.degrees[x]);
        }
        ac = std::min(max_out.complement(), max_in);
        rc = std::min(max_in.complement(), max_out);
    } else {
        Degree miss_in = Degree::one(), miss_out = Degree::one();
        for (ObjectId x = 0; x < profile.degrees.size(); ++x) {
            auto& m = x_class.count(x) ? miss_in : miss_out;
            m = m * profile.degrees[x].complement();
        }
        ac = miss_out * miss_in.complement();
        rc = miss_in * miss_out.complement();
    }
    return {profile.formula, ac, rc, x_class};
}

Confidence confidence(const SetValuedTable& st, const Formula& p, const ObjectSet& x_class, TNormKind kind) {
    st.schema().check_objects(x_class);
    return confidence(sat_profile(st, p, kind), x_class);
}

DescriptionRegions description_regions_confidence(const SetValuedTable& st, const AttrSet& attrs,
                                                  const Degree& alpha, const ObjectSet& x, TNormKind kind,
                                                  std::uint64_t max_formulas) {
    const auto& schema = st.schema();
    schema.check_objects(x);
    DescriptionRegions r;
    for (auto& p : enumerate_cdl(schema, attrs, Mode::Strict, max_formulas)) {
        auto c = confidence(sat_profile(st, p, kind), x);
        if (c.ac >= alpha) r.dpos.insert(p);
        if (c.rc >= alpha) r.dneg.insert(p);
    }
    return r;
}

}  // namespace twd
