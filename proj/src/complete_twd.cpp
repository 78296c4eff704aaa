#include "twd/complete_twd.hpp"

#include <algorithm>
#include <map>

#include "twd/error.hpp"

namespace twd {

namespace {

void check_attrs(const Schema& schema, const AttrSet& attrs, bool allow_empty = false) {
    if (attrs.empty() && !allow_empty) throw InvalidArgument("attribute subset must be nonempty");
    for (auto a : attrs) {
        if (a >= schema.attribute_count()) throw InvalidArgument("attribute index out of range");
    }
}

bool subset(const ObjectSet& a, const ObjectSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Partition partition(const CompleteTable& t, const AttrSet& attrs) {
    const auto& schema = t.schema();
    check_attrs(schema, attrs, true);
    Partition p;
    p.index.resize(schema.object_count());
    std::map<std::vector<ValueId>, std::size_t> seen;
    for (ObjectId x = 0; x < schema.object_count(); ++x) {
        std::vector<ValueId> key;
        for (auto a : attrs) key.push_back(t.value(x, a));
        auto [it, fresh] = seen.emplace(std::move(key), p.blocks.size());
        if (fresh) p.blocks.emplace_back();
        p.blocks[it->second].insert(x);
        p.index[x] = it->second;
    }
    return p;
}

StructuredRegions split_family(const Family& blocks, const ObjectSet& x, const ObjectSet& universe) {
    ObjectSet xc;
    std::set_difference(universe.begin(), universe.end(), x.begin(), x.end(), std::inserter(xc, xc.end()));
    StructuredRegions r;
    for (const auto& b : blocks) {
        if (b.empty()) continue;
        if (subset(b, x)) {
            r.pos.insert(b);
        } else if (subset(b, xc)) {
            r.neg.insert(b);
        } else {
            r.bnd.insert(b);
        }
    }
    return r;
}

StructuredRegions regions_computational(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x) {
    t.schema().check_objects(x);
    return split_family(partition(t, attrs).family(), x, t.schema().all_objects());
}

std::vector<DescribedSet> cdef_family(const CompleteTable& t, const AttrSet& attrs, std::uint64_t max_formulas) {
    std::map<ObjectSet, FormulaSet> by_members;
    for (auto& p : enumerate_cdl(t.schema(), attrs, Mode::Strict, max_formulas)) {
        by_members[meaning_set(t, p)].insert(std::move(p));
    }
    std::vector<DescribedSet> out;
    for (auto& [members, descriptions] : by_members) out.push_back({members, std::move(descriptions)});
    return out;
}

ConceptualRegions regions_conceptual(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x,
                                     std::uint64_t max_formulas) {
    t.schema().check_objects(x);
    auto xc = t.schema().complement(x);
    ConceptualRegions r;
    for (auto& d : cdef_family(t, attrs, max_formulas)) {
        if (d.members.empty()) continue;
        if (subset(d.members, x)) {
            r.pos.push_back(std::move(d));
        } else if (subset(d.members, xc)) {
            r.neg.push_back(std::move(d));
        }
    }
    return r;
}

Family boolean_algebra(const Family& blocks, std::uint64_t max_sets) {
    Family closure{ObjectSet{}};
    for (const auto& b : blocks) {
        std::vector<ObjectSet> added;
        for (const auto& c : closure) {
            ObjectSet u = c;
            u.insert(b.begin(), b.end());
            if (!closure.count(u)) added.push_back(std::move(u));
        }
        for (auto& u : added) {
            closure.insert(std::move(u));
            if (closure.size() > max_sets) {
                throw GuardExceeded("union closure exceeds the cap of " + std::to_string(max_sets) + " sets");
            }
        }
    }
    return closure;
}

StructuredRegions regions_general(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x,
                                  std::uint64_t max_sets) {
    t.schema().check_objects(x);
    auto def = boolean_algebra(partition(t, attrs).family(), max_sets);
    return split_family(def, x, t.schema().all_objects());
}

DescriptionRegions description_regions_complete(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x,
                                                std::uint64_t max_formulas) {
    t.schema().check_objects(x);
    auto xc = t.schema().complement(x);
    DescriptionRegions r;
    for (auto& p : enumerate_cdl(t.schema(), attrs, Mode::Strict, max_formulas)) {
        auto m = meaning_set(t, p);
        if (m.empty()) continue;
        if (subset(m, x)) {
            r.dpos.insert(std::move(p));
        } else if (subset(m, xc)) {
            r.dneg.insert(std::move(p));
        }
    }
    return r;
}

DescriptionRegions description_regions_partition(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x,
                                                 bool all_subsets) {
    t.schema().check_objects(x);
    check_attrs(t.schema(), attrs);
    std::vector<AttrSet> choices;
    if (all_subsets) {
        if (attrs.size() >= 63) throw GuardExceeded("too many attributes to enumerate subsets");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << attrs.size()); ++mask) {
            AttrSet b;
            for (std::size_t i = 0; i < attrs.size(); ++i) {
                if (mask >> i & 1) b.push_back(attrs[i]);
            }
            choices.push_back(std::move(b));
        }
    } else {
        choices.push_back(attrs);
    }

    DescriptionRegions r;
    for (const auto& b : choices) {
        auto regions = regions_computational(t, b, x);
        for (const auto& block : regions.pos) r.dpos.insert(object_description(t.row(*block.begin()), b));
        for (const auto& block : regions.neg) r.dneg.insert(object_description(t.row(*block.begin()), b));
    }
    return r;
}

}  // namespace twd
