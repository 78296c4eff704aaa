#include "twd/similarity_twd.hpp"

#include <algorithm>

#include "twd/error.hpp"

namespace twd {

namespace {

void check_pair(const Schema& s, ObjectId x, ObjectId y) {
    if (x >= s.object_count() || y >= s.object_count()) throw InvalidArgument("object index out of range");
}

void check_attrs(const Schema& s, const AttrSet& attrs) {
    if (attrs.empty()) throw InvalidArgument("attribute subset must be nonempty");
    for (auto a : attrs) {
        if (a >= s.attribute_count()) throw InvalidArgument("attribute index out of range");
    }
}

}  // namespace

Degree similarity_single(const SetValuedTable& st, AttrId a, ObjectId x, ObjectId y) {
    check_pair(st.schema(), x, y);
    if (a >= st.schema().attribute_count()) throw InvalidArgument("attribute index out of range");
    if (x == y) return Degree::one();
    const auto& sx = st.cell(x, a);
    const auto& sy = st.cell(y, a);
    std::vector<ValueId> common;
    std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(common));
    return Degree(static_cast<std::int64_t>(common.size()), static_cast<std::int64_t>(sx.size() * sy.size()));
}

Degree similarity(const SetValuedTable& st, const AttrSet& attrs, TNormKind kind, ObjectId x, ObjectId y) {
    check_attrs(st.schema(), attrs);
    std::vector<Degree> parts;
    parts.reserve(attrs.size());
    for (auto a : attrs) parts.push_back(similarity_single(st, a, x, y));
    return fuzzy::tnorm(kind, parts);
}

SimilarityMatrix::SimilarityMatrix(const SetValuedTable& st, const AttrSet& attrs, TNormKind kind)
    : n_(st.schema().object_count()), kind_(kind), attrs_(attrs) {
    check_attrs(st.schema(), attrs);
    entries_.resize(n_ * n_);
    for (ObjectId x = 0; x < n_; ++x) {
        entries_[x * n_ + x] = Degree::one();
        for (ObjectId y = x + 1; y < n_; ++y) {
            entries_[x * n_ + y] = entries_[y * n_ + x] = similarity(st, attrs, kind, x, y);
        }
    }
}

ObjectSet alpha_similarity_class(const SimilarityMatrix& m, ObjectId x, const Degree& alpha) {
    if (x >= m.size()) throw InvalidArgument("object index out of range");
    ObjectSet out;
    for (ObjectId y = 0; y < m.size(); ++y) {
        if (m(x, y) >= alpha) out.insert(y);
    }
    return out;
}

FormulaSet cdes(const SetValuedTable& st, const AttrSet& attrs, ObjectId x, std::uint64_t max_formulas) {
    check_attrs(st.schema(), attrs);
    if (x >= st.schema().object_count()) throw InvalidArgument("object index out of range");
    std::uint64_t count = 1;
    for (auto a : attrs) {
        auto k = st.cell(x, a).size();
        if (count > max_formulas / k) {
            throw GuardExceeded("object description set exceeds the cap of " + std::to_string(max_formulas));
        }
        count *= k;
    }

    FormulaSet out;
    std::vector<std::size_t> pick(attrs.size(), 0);
    while (true) {
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < attrs.size(); ++i) atoms.push_back({attrs[i], st.cell(x, attrs[i])[pick[i]]});
        out.emplace(std::move(atoms));
        std::size_t i = pick.size();
        while (i > 0) {
            --i;
            if (++pick[i] < st.cell(x, attrs[i]).size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
    }
}

DescriptionRegions description_regions_alpha_sim(const SetValuedTable& st, const AttrSet& attrs, const Degree& alpha,
                                                 const ObjectSet& x, TNormKind kind, std::uint64_t max_formulas) {
    const auto& schema = st.schema();
    schema.check_objects(x);
    auto xc = schema.complement(x);
    SimilarityMatrix m(st, attrs, kind);
    DescriptionRegions r;
    for (ObjectId y = 0; y < schema.object_count(); ++y) {
        auto cls = alpha_similarity_class(m, y, alpha);
        bool in_x = std::includes(x.begin(), x.end(), cls.begin(), cls.end());
        bool in_xc = std::includes(xc.begin(), xc.end(), cls.begin(), cls.end());
        if (!in_x && !in_xc) continue;
        auto descs = cdes(st, attrs, y, max_formulas);
        if (in_x) r.dpos.insert(descs.begin(), descs.end());
        if (in_xc) r.dneg.insert(descs.begin(), descs.end());
    }
    return r;
}

Approximability approximability(const SimilarityMatrix& m, const ObjectSet& x_class, ObjectId x) {
    if (x >= m.size()) throw InvalidArgument("object index out of range");
    std::vector<Degree> pos, neg;
    for (ObjectId y = 0; y < m.size(); ++y) {
        auto in = x_class.count(y) ? Degree::one() : Degree::zero();
        pos.push_back(fuzzy::implication(m.kind(), m(x, y), in));
        neg.push_back(fuzzy::implication(m.kind(), m(x, y), in.complement()));
    }
    return {x, fuzzy::tnorm(m.kind(), pos), fuzzy::tnorm(m.kind(), neg), x_class};
}

Approximability approximability_closed_form(const SimilarityMatrix& m, const ObjectSet& x_class, ObjectId x) {
    if (x >= m.size()) throw InvalidArgument("object index out of range");
    // Over an empty side both kinds give 1.
    Degree papr = Degree::one();
    Degree napr = Degree::one();
    for (ObjectId y = 0; y < m.size(); ++y) {
        auto& target = x_class.count(y) ? napr : papr;
        auto term = m(x, y).complement();
        target = m.kind() == TNormKind::Min ? std::min(target, term) : target * term;
    }
    return {x, papr, napr, x_class};
}

Approximability approximability(const SetValuedTable& st, const AttrSet& attrs, TNormKind kind,
                                const ObjectSet& x_class, ObjectId x) {
    st.schema().check_objects(x_class);
    return approximability(SimilarityMatrix(st, attrs, kind), x_class, x);
}

DescriptionRegions description_regions_approx(const SetValuedTable& st, const AttrSet& attrs, const Degree& alpha,
                                              const ObjectSet& x, TNormKind kind, std::uint64_t max_formulas) {
    const auto& schema = st.schema();
    schema.check_objects(x);
    SimilarityMatrix m(st, attrs, kind);
    DescriptionRegions r;
    for (ObjectId y = 0; y < schema.object_count(); ++y) {
        auto apr = approximability(m, x, y);
        bool pos = apr.papr >= alpha;
        bool neg = apr.napr >= alpha;
        if (!pos && !neg) continue;
        auto descs = cdes(st, attrs, y, max_formulas);
        if (pos) r.dpos.insert(descs.begin(), descs.end());
        if (neg) r.dneg.insert(descs.begin(), descs.end());
    }
    return r;
}

}  // namespace twd
