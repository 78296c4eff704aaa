#pragma once

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "twd/complete_twd.hpp"
#include "twd/degree.hpp"
#include "twd/fuzzy.hpp"
#include "twd/language.hpp"
#include "twd/table.hpp"

namespace twd::test {

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

inline SetValuedTable load_set_valued(const std::string& name) { return to_set_valued(load_table(fixture(name))); }
inline CompleteTable load_complete(const std::string& name) { return CompleteTable(load_set_valued(name)); }

inline ObjectSet objs(const Schema& s, std::string_view csv) {
    if (csv.empty()) return {};
    return s.parse_objects(csv);
}

inline Family family(const Schema& s, std::initializer_list<const char*> sets) {
    Family f;
    for (const char* csv : sets) f.insert(objs(s, csv));
    return f;
}

// "a1=1&a2=NA"
inline Formula formula(const Schema& s, std::string_view text) { return parse_formula(s, text, Mode::Extended); }

inline FormulaSet formulas(const Schema& s, std::initializer_list<const char*> texts) {
    FormulaSet out;
    for (const char* t : texts) out.insert(formula(s, t));
    return out;
}

// p1, p2, ... as numbered by the strict enumeration over all attributes.
inline Formula label(const Schema& s, std::size_t i) {
    return enumerate_cdl(s, s.all_attributes(), Mode::Strict).at(i - 1);
}

inline FormulaSet labels(const Schema& s, std::initializer_list<std::size_t> ids) {
    auto all = enumerate_cdl(s, s.all_attributes(), Mode::Strict);
    FormulaSet out;
    for (auto i : ids) out.insert(all.at(i - 1));
    return out;
}

// ---- random generators ------------------------------------------------------

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Schema random_schema(Rng& rng, std::size_t max_objects, std::size_t max_attrs, std::size_t max_domain) {
    Schema s;
    auto n = pick(rng, 1, max_objects);
    auto m = pick(rng, 1, max_attrs);
    for (std::size_t i = 0; i < n; ++i) s.objects.push_back("o" + std::to_string(i + 1));
    for (std::size_t a = 0; a < m; ++a) {
        AttributeSchema as{"c" + std::to_string(a + 1), {}};
        auto k = pick(rng, 1, max_domain);
        for (std::size_t v = 0; v < k; ++v) as.domain.push_back(std::to_string(v));
        s.attributes.push_back(std::move(as));
    }
    return s;
}

inline CompleteTable random_complete(Rng& rng, std::size_t max_objects = 6, std::size_t max_attrs = 3,
                                     std::size_t max_domain = 3) {
    auto s = random_schema(rng, max_objects, max_attrs, max_domain);
    std::vector<ValueId> values;
    for (std::size_t x = 0; x < s.object_count(); ++x) {
        for (const auto& a : s.attributes) values.push_back(static_cast<ValueId>(pick(rng, 0, a.domain.size() - 1)));
    }
    return CompleteTable(std::move(s), std::move(values));
}

inline SetValuedTable random_set_valued(Rng& rng, std::size_t max_objects = 6, std::size_t max_attrs = 3,
                                        std::size_t max_domain = 3, double na_rate = 0.1) {
    auto s = random_schema(rng, max_objects, max_attrs, max_domain);
    std::vector<ValueSet> cells;
    for (std::size_t x = 0; x < s.object_count(); ++x) {
        for (const auto& a : s.attributes) {
            if (coin(rng, na_rate)) {
                cells.push_back({kNa});
                continue;
            }
            ValueSet vs;
            while (vs.empty()) {
                for (ValueId v = 0; v < a.domain.size(); ++v) {
                    if (coin(rng)) vs.push_back(v);
                }
            }
            cells.push_back(std::move(vs));
        }
    }
    return SetValuedTable(std::move(s), std::move(cells));
}

inline ObjectSet random_subset(Rng& rng, std::size_t n) {
    ObjectSet out;
    for (std::size_t i = 0; i < n; ++i) {
        if (coin(rng)) out.insert(i);
    }
    return out;
}

inline AttrSet random_attrs(Rng& rng, std::size_t m) {
    AttrSet out;
    while (out.empty()) {
        for (std::size_t a = 0; a < m; ++a) {
            if (coin(rng)) out.push_back(a);
        }
    }
    return out;
}

inline Degree random_degree(Rng& rng, std::int64_t max_den = 12) {
    auto den = static_cast<std::int64_t>(pick(rng, 1, static_cast<std::size_t>(max_den)));
    auto num = static_cast<std::int64_t>(pick(rng, 0, static_cast<std::size_t>(den)));
    return Degree(num, den);
}

// ---- reference computations ---------------------------------------------------
// Written straight from the definitions, sharing nothing with the library
// beyond the table types.

namespace ref {

inline Rational fold(fuzzy::TNormKind kind, const std::vector<Rational>& xs) {
    Rational acc = 1;
    for (const auto& v : xs) acc = kind == fuzzy::TNormKind::Min ? std::min(acc, v) : acc * v;
    return acc;
}

inline Rational implies(fuzzy::TNormKind kind, const Rational& a, const Rational& b) {
    if (kind == fuzzy::TNormKind::Min) return std::max(Rational(1) - a, b);
    return Rational(1) - a + a * b;
}

inline Rational similarity(const SetValuedTable& st, const AttrSet& attrs, fuzzy::TNormKind kind, ObjectId x,
                           ObjectId y) {
    if (x == y) return 1;
    std::vector<Rational> per;
    for (auto a : attrs) {
        const auto& cx = st.cell(x, a);
        const auto& cy = st.cell(y, a);
        std::int64_t same = 0;
        for (auto u : cx) {
            for (auto v : cy) same += u == v;
        }
        per.emplace_back(Rational(same) / Rational(static_cast<std::int64_t>(cx.size() * cy.size())));
    }
    return fold(kind, per);
}

inline Rational sat(const SetValuedTable& st, ObjectId x, const Formula& p, fuzzy::TNormKind kind) {
    std::vector<Rational> per;
    for (const auto& atom : p.atoms()) {
        const auto& c = st.cell(x, atom.attr);
        auto hit = std::count(c.begin(), c.end(), atom.value);
        per.emplace_back(Rational(hit) / Rational(static_cast<std::int64_t>(c.size())));
    }
    return fold(kind, per);
}

inline std::vector<ObjectSet> classes(const CompleteTable& t, const AttrSet& attrs) {
    std::vector<ObjectSet> out;
    for (ObjectId x = 0; x < t.schema().object_count(); ++x) {
        ObjectSet c;
        for (ObjectId y = 0; y < t.schema().object_count(); ++y) {
            bool same = true;
            for (auto a : attrs) same = same && t.value(x, a) == t.value(y, a);
            if (same) c.insert(y);
        }
        out.push_back(std::move(c));
    }
    return out;
}

// Generic approximability: T over y of I(G(x,y), 1_X(y)) and of I(G(x,y), 1_Xc(y)).
inline std::pair<Rational, Rational> approximability(const SetValuedTable& st, const AttrSet& attrs,
                                                     fuzzy::TNormKind kind, const ObjectSet& cls, ObjectId x) {
    std::vector<Rational> pos, neg;
    for (ObjectId y = 0; y < st.schema().object_count(); ++y) {
        auto g = similarity(st, attrs, kind, x, y);
        Rational in = cls.count(y) ? 1 : 0;
        pos.push_back(implies(kind, g, in));
        neg.push_back(implies(kind, g, Rational(1) - in));
    }
    return {fold(kind, pos), fold(kind, neg)};
}

// Generic confidence: T(T_x I(D, 1_X), N(T_x I(D, 1_Xc))) and its mirror image.
inline std::pair<Rational, Rational> confidence(const std::vector<Rational>& d, fuzzy::TNormKind kind,
                                                const ObjectSet& cls) {
    std::vector<Rational> to_x, to_xc;
    for (std::size_t i = 0; i < d.size(); ++i) {
        Rational in = cls.count(i) ? 1 : 0;
        to_x.push_back(implies(kind, d[i], in));
        to_xc.push_back(implies(kind, d[i], Rational(1) - in));
    }
    auto tx = fold(kind, to_x);
    auto txc = fold(kind, to_xc);
    return {fold(kind, {tx, Rational(1) - txc}), fold(kind, {txc, Rational(1) - tx})};
}

}  // namespace ref

}  // namespace twd::test
