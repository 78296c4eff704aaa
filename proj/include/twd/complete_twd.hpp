#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "twd/language.hpp"
#include "twd/table.hpp"

namespace twd {

using Family = std::set<ObjectSet>;

inline constexpr std::uint64_t kDefaultMaxClosure = std::uint64_t{1} << 16;

// Blocks are ordered by their smallest member.
struct Partition {
    std::vector<ObjectSet> blocks;
    std::vector<std::size_t> index;  // object -> block

    Family family() const { return {blocks.begin(), blocks.end()}; }
};

struct StructuredRegions {
    Family pos;
    Family neg;
    Family bnd;
};

// A conjunctively definable set with every formula that defines it.
struct DescribedSet {
    ObjectSet members;
    FormulaSet descriptions;
};

struct ConceptualRegions {
    std::vector<DescribedSet> pos;
    std::vector<DescribedSet> neg;
};

// An empty A gives the single block OB.
Partition partition(const CompleteTable& t, const AttrSet& attrs);

// Splits `blocks` by inclusion in X, in X's complement, or neither.
StructuredRegions split_family(const Family& blocks, const ObjectSet& x, const ObjectSet& universe);

StructuredRegions regions_computational(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x);

// Ordered by member set; the empty set is present when some formula has no instance.
std::vector<DescribedSet> cdef_family(const CompleteTable& t, const AttrSet& attrs,
                                      std::uint64_t max_formulas = kDefaultMaxFormulas);

ConceptualRegions regions_conceptual(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x,
                                     std::uint64_t max_formulas = kDefaultMaxFormulas);

// Closure under arbitrary unions, including the empty union. Throws
// GuardExceeded once the closure would grow past `max_sets`.
Family boolean_algebra(const Family& blocks, std::uint64_t max_sets = kDefaultMaxClosure);

// Nonempty members of the union closure of the partition, split by inclusion.
StructuredRegions regions_general(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x,
                                  std::uint64_t max_sets = kDefaultMaxClosure);

// Formulas over A with a nonempty meaning set inside X (dpos) or inside its complement (dneg).
DescriptionRegions description_regions_complete(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x,
                                                std::uint64_t max_formulas = kDefaultMaxFormulas);

// Full descriptions of the positive and negative equivalence classes of A.
// With `all_subsets`, the union over every nonempty B of A.
DescriptionRegions description_regions_partition(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x,
                                                 bool all_subsets = false);

}  // namespace twd
