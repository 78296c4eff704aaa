#pragma once

#include <vector>

#include "twd/degree.hpp"
#include "twd/fuzzy.hpp"
#include "twd/language.hpp"
#include "twd/table.hpp"

namespace twd {

using fuzzy::TNormKind;

// |s_a(x) & s_a(y)| / (|s_a(x)| * |s_a(y)|), or 1 when x == y. NA is an ordinary token here.
Degree similarity_single(const SetValuedTable& st, AttrId a, ObjectId x, ObjectId y);

// T-norm of the per-attribute degrees over A.
Degree similarity(const SetValuedTable& st, const AttrSet& attrs, TNormKind kind, ObjectId x, ObjectId y);

class SimilarityMatrix {
public:
    SimilarityMatrix(const SetValuedTable& st, const AttrSet& attrs, TNormKind kind);

    std::size_t size() const noexcept { return n_; }
    TNormKind kind() const noexcept { return kind_; }
    const AttrSet& attributes() const noexcept { return attrs_; }
    const Degree& operator()(ObjectId x, ObjectId y) const { return entries_.at(x * n_ + y); }

private:
    std::size_t n_;
    TNormKind kind_;
    AttrSet attrs_;
    std::vector<Degree> entries_;
};

inline SimilarityMatrix similarity_matrix(const SetValuedTable& st, const AttrSet& attrs, TNormKind kind) {
    return SimilarityMatrix(st, attrs, kind);
}

// {y : G(x, y) >= alpha}
ObjectSet alpha_similarity_class(const SimilarityMatrix& m, ObjectId x, const Degree& alpha);

// Every full description of x over A that its cells allow, NA included.
FormulaSet cdes(const SetValuedTable& st, const AttrSet& attrs, ObjectId x,
                std::uint64_t max_formulas = kDefaultMaxFormulas);

DescriptionRegions description_regions_alpha_sim(const SetValuedTable& st, const AttrSet& attrs, const Degree& alpha,
                                                 const ObjectSet& x, TNormKind kind,
                                                 std::uint64_t max_formulas = kDefaultMaxFormulas);

struct Approximability {
    ObjectId object;
    Degree papr;
    Degree napr;
    ObjectSet class_ref;
};

// Evaluates T_y I(G(x,y), 1_X(y)) and its negative counterpart directly.
Approximability approximability(const SimilarityMatrix& m, const ObjectSet& x_class, ObjectId x);
// Same values via the per-kind closed forms over the complement and the class.
Approximability approximability_closed_form(const SimilarityMatrix& m, const ObjectSet& x_class, ObjectId x);

Approximability approximability(const SetValuedTable& st, const AttrSet& attrs, TNormKind kind,
                                const ObjectSet& x_class, ObjectId x);

DescriptionRegions description_regions_approx(const SetValuedTable& st, const AttrSet& attrs, const Degree& alpha,
                                              const ObjectSet& x, TNormKind kind,
                                              std::uint64_t max_formulas = kDefaultMaxFormulas);

}  // namespace twd
