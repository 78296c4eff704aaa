#pragma once

#include <vector>

#include "twd/degree.hpp"
#include "twd/fuzzy.hpp"
#include "twd/language.hpp"
#include "twd/table.hpp"

namespace twd {

using fuzzy::TNormKind;

// Atoms score |s_a(x) & {v}| / |s_a(x)|, so an NA cell scores 0; conjunctions
// combine atom scores with the T-norm. Throws InvalidArgument on NA atoms.
Degree sat_degree(const SetValuedTable& st, ObjectId x, const Formula& p, TNormKind kind);

struct SatProfile {
    Formula formula;
    TNormKind kind;
    std::vector<Degree> degrees;  // indexed by object
};

SatProfile sat_profile(const SetValuedTable& st, const Formula& p, TNormKind kind);

ObjectSet alpha_meaning_set(const SatProfile& profile, const Degree& alpha);
ObjectSet alpha_meaning_set(const SetValuedTable& st, const Formula& p, const Degree& alpha, TNormKind kind);

DescriptionRegions description_regions_alpha_meaning(const SetValuedTable& st, const AttrSet& attrs,
                                                     const Degree& alpha, const ObjectSet& x, TNormKind kind,
                                                     std::uint64_t max_formulas = kDefaultMaxFormulas);

struct Confidence {
    Formula formula;
    Degree ac;
    Degree rc;
    ObjectSet class_ref;
};

// T(T_x I(D, 1_X), N(T_x I(D, 1_Xc))) and the symmetric rejection value, evaluated directly.
Confidence confidence(const SatProfile& profile, const ObjectSet& x_class);
// Same values via the per-kind closed forms.
Confidence confidence_closed_form(const SatProfile& profile, const ObjectSet& x_class);

Confidence confidence(const SetValuedTable& st, const Formula& p, const ObjectSet& x_class, TNormKind kind);

DescriptionRegions description_regions_confidence(const SetValuedTable& st, const AttrSet& attrs,
                                                  const Degree& alpha, const ObjectSet& x, TNormKind kind,
                                                  std::uint64_t max_formulas = kDefaultMaxFormulas);

}  // namespace twd
