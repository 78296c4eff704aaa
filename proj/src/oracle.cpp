#include "twd/oracle.hpp"

#include "twd/error.hpp"
#include "twd/satisfiability_twd.hpp"
#include "twd/similarity_twd.hpp"

namespace twd::oracle {

namespace {

// Odometer over a list of cells; calls visit(choice) for each combination.
template <typename Visit>
std::uint64_t for_each_completion(const std::vector<const ValueSet*>& cells, std::uint64_t max_worlds, Visit visit) {
    std::uint64_t total = 1;
    for (const auto* c : cells) {
        if (total > max_worlds / c->size()) {
            throw GuardExceeded("oracle enumeration exceeds the cap of " + std::to_string(max_worlds) + " worlds");
        }
        total *= c->size();
    }
    std::vector<ValueId> choice(cells.size());
    std::vector<std::size_t> idx(cells.size(), 0);
    for (std::uint64_t w = 0; w < total; ++w) {
        std::uint64_t rest = w;
        for (std::size_t i = cells.size(); i-- > 0;) {
            idx[i] = rest % cells[i]->size();
            rest /= cells[i]->size();
            choice[i] = (*cells[i])[idx[i]];
        }
        visit(choice);
    }
    return total;
}

std::string degree_or_bool(const std::variant<Degree, bool>& v) {
    if (auto* d = std::get_if<Degree>(&v)) return d->to_fraction();
    return std::get<bool>(v) ? "true" : "false";
}

std::uint64_t mask_of(const ObjectSet& s) {
    std::uint64_t m = 0;
    for (auto x : s) m |= std::uint64_t{1} << x;
    return m;
}

ObjectSet set_of(std::uint64_t m, std::size_t n) {
    ObjectSet out;
    for (std::size_t i = 0; i < n; ++i) {
        if (m >> i & 1) out.insert(i);
    }
    return out;
}

bool agree(const CompleteTable& t, const AttrSet& attrs, ObjectId x, ObjectId y) {
    for (auto a : attrs) {
        if (t.value(x, a) != t.value(y, a)) return false;
    }
    return true;
}

ObjectSet class_of(const CompleteTable& t, const AttrSet& attrs, ObjectId x) {
    ObjectSet out;
    for (ObjectId y = 0; y < t.schema().object_count(); ++y) {
        if (agree(t, attrs, x, y)) out.insert(y);
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const OracleReport& r) {
    return {{"check", r.check},
            {"inputs", r.inputs},
            {"expected", degree_or_bool(r.expected)},
            {"actual", degree_or_bool(r.actual)},
            {"pass", r.pass}};
}

Degree similarity(const SetValuedTable& st, const AttrSet& attrs, ObjectId x, ObjectId y, std::uint64_t max_worlds) {
    const auto& s = st.schema();
    if (x >= s.object_count() || y >= s.object_count()) throw InvalidArgument("object index out of range");
    if (x == y) throw InvalidArgument("similarity oracle applies to distinct objects only");
    if (attrs.empty()) throw InvalidArgument("attribute subset must be nonempty");
    std::vector<const ValueSet*> cells;
    for (auto a : attrs) cells.push_back(&st.cell(x, a));
    for (auto a : attrs) cells.push_back(&st.cell(y, a));
    const auto k = attrs.size();
    std::uint64_t hits = 0;
    auto total = for_each_completion(cells, max_worlds, [&](const std::vector<ValueId>& w) {
        for (std::size_t i = 0; i < k; ++i) {
            if (w[i] != w[k + i]) return;
        }
        ++hits;
    });
    return Degree(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(total));
}

Degree sat_degree(const SetValuedTable& st, ObjectId x, const Formula& p, std::uint64_t max_worlds) {
    const auto& s = st.schema();
    if (x >= s.object_count()) throw InvalidArgument("object index out of range");
    std::vector<const ValueSet*> cells;
    for (AttrId a = 0; a < s.attribute_count(); ++a) cells.push_back(&st.cell(x, a));
    std::uint64_t hits = 0;
    auto total = for_each_completion(cells, max_worlds, [&](const std::vector<ValueId>& w) {
        for (const auto& atom : p.atoms()) {
            if (w.at(atom.attr) != atom.value) return;
        }
        ++hits;
    });
    return Degree(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(total));
}

Family definable_sets(std::size_t object_count, const std::vector<ObjectSet>& family) {
    if (object_count > kMaxSubsetObjects) {
        throw GuardExceeded("definable-set oracle handles at most " + std::to_string(kMaxSubsetObjects) + " objects");
    }
    std::vector<std::uint64_t> masks;
    for (const auto& f : family) masks.push_back(mask_of(f));
    Family out;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << object_count); ++y) {
        std::uint64_t covered = 0;
        for (auto m : masks) {
            if ((m & ~y) == 0) covered |= m;
        }
        if (covered == y) out.insert(set_of(y, object_count));
    }
    return out;
}

OracleReport definable_closure(const CompleteTable& t, const AttrSet& attrs) {
    const auto n = t.schema().object_count();
    if (attrs.empty()) throw InvalidArgument("attribute subset must be nonempty");

    std::vector<ObjectSet> blocks;
    for (ObjectId x = 0; x < n; ++x) blocks.push_back(class_of(t, attrs, x));

    // A satisfiable formula over B defines exactly the B-class of any object
    // satisfying it, so these are the nonempty conjunctively definable sets.
    std::vector<ObjectSet> cdef;
    if (attrs.size() >= 63) throw GuardExceeded("too many attributes for the subset oracle");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << attrs.size()); ++mask) {
        AttrSet b;
        for (std::size_t i = 0; i < attrs.size(); ++i) {
            if (mask >> i & 1) b.push_back(attrs[i]);
        }
        for (ObjectId x = 0; x < n; ++x) cdef.push_back(class_of(t, b, x));
    }

    auto from_blocks = definable_sets(n, blocks);
    auto from_cdef = definable_sets(n, cdef);

    auto lib_blocks = boolean_algebra(partition(t, attrs).family());
    Family lib_cdef_members;
    for (const auto& d : cdef_family(t, attrs)) lib_cdef_members.insert(d.members);
    auto lib_cdef = boolean_algebra(lib_cdef_members);

    bool actual = from_blocks == from_cdef && lib_blocks == from_blocks && lib_cdef == from_cdef;
    return {"definable_closure",
            "attrs=" + t.schema().attribute_names(attrs) + " definable=" + std::to_string(from_blocks.size()),
            true, actual, actual};
}

OracleReport classical_reduction(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x,
                                 const Degree& alpha) {
    const auto& schema = t.schema();
    schema.check_objects(x);
    if (alpha == Degree::zero()) throw InvalidArgument("classical reduction needs alpha in (0,1]");
    auto st = t.to_set_valued();

    bool ok = true;
    for (auto kind : {TNormKind::Min, TNormKind::Product}) {
        SimilarityMatrix m(st, attrs, kind);
        for (ObjectId y = 0; y < schema.object_count(); ++y) {
            if (alpha_similarity_class(m, y, alpha) != class_of(t, attrs, y)) ok = false;
        }

        DescriptionRegions expected;
        for (ObjectId y = 0; y < schema.object_count(); ++y) {
            auto cls = class_of(t, attrs, y);
            bool inside = true, outside = true;
            for (auto z : cls) {
                (x.count(z) ? outside : inside) = false;
            }
            std::vector<Atom> atoms;
            for (auto a : attrs) atoms.push_back({a, t.value(y, a)});
            if (inside) expected.dpos.emplace(atoms);
            if (outside) expected.dneg.emplace(atoms);
        }
        auto got = description_regions_alpha_sim(st, attrs, alpha, x, kind);
        if (got.dpos != expected.dpos || got.dneg != expected.dneg) ok = false;
    }
    return {"classical-reduction",
            "attrs=" + schema.attribute_names(attrs) + " class=" + schema.object_names(x) + " alpha=" +
                alpha.to_fraction(),
            true, ok, ok};
}

Hooks Hooks::library() {
    return {[](const SetValuedTable& st, const AttrSet& attrs, ObjectId x, ObjectId y) {
                return twd::similarity(st, attrs, TNormKind::Product, x, y);
            },
            [](const SetValuedTable& st, ObjectId x, const Formula& p) {
                return twd::sat_degree(st, x, p, TNormKind::Product);
            }};
}

std::vector<OracleReport> run_all(const SetValuedTable& st, const AttrSet& attrs, const RunOptions& opts,
                                  const Hooks& hooks) {
    const auto& schema = st.schema();
    std::vector<OracleReport> out;
    for (ObjectId x = 0; x < schema.object_count(); ++x) {
        for (ObjectId y = x + 1; y < schema.object_count(); ++y) {
            auto expected = similarity(st, attrs, x, y, opts.max_worlds);
            auto actual = hooks.similarity(st, attrs, x, y);
            out.push_back({"similarity-prod",
                           "attrs=" + schema.attribute_names(attrs) + " x=" + schema.objects[x] + " y=" +
                               schema.objects[y],
                           expected, actual, expected == actual});
        }
    }
    for (const auto& p : enumerate_cdl(schema, attrs, Mode::Strict, opts.max_formulas)) {
        for (ObjectId x = 0; x < schema.object_count(); ++x) {
            auto expected = sat_degree(st, x, p, opts.max_worlds);
            auto actual = hooks.sat_degree(st, x, p);
            out.push_back({"sat-degree-prod", "x=" + schema.objects[x] + " p=" + render_formula(schema, p), expected,
                           actual, expected == actual});
        }
    }
    if (is_complete(st)) {
        CompleteTable t(st);
        out.push_back(definable_closure(t, attrs));
        if (opts.class_set) {
            out.push_back(classical_reduction(t, attrs, *opts.class_set, opts.alpha));
        } else {
            for (ObjectId x = 0; x < schema.object_count(); ++x) {
                out.push_back(classical_reduction(t, attrs, {x}, opts.alpha));
            }
        }
    }
    return out;
}

}  // namespace twd::oracle
