#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "twd/table.hpp"

namespace twd {

struct Atom {
    AttrId attr;
    ValueId value;  // kNa only in extended mode

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

// Conjunction of atoms over pairwise distinct attributes, kept sorted by
// attribute. Ordered by atom count first, then lexicographically over the
// (attribute, value) sequence; this is the enumeration order of enumerate_cdl.
class Formula {
public:
    // Sorts the atoms; throws InvalidArgument if empty or an attribute repeats.
    explicit Formula(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    bool has_na() const;
    AttrSet attributes() const;

    friend bool operator==(const Formula&, const Formula&) = default;
    friend std::strong_ordering operator<=>(const Formula& p, const Formula& q);

private:
    std::vector<Atom> atoms_;
};

using FormulaSet = std::set<Formula>;

// Positive and negative description regions. The boundary is whatever is in
// neither; the two sets may overlap for the incomplete-table methods.
struct DescriptionRegions {
    FormulaSet dpos;
    FormulaSet dneg;
};

// Throws InvalidArgument if p and q share an attribute.
Formula conjoin(const Formula& p, const Formula& q);

enum class Mode { Strict, Extended };

inline constexpr std::uint64_t kDefaultMaxFormulas = 1'000'000;

// Every formula over A. Strict mode draws values from the domain; extended
// mode also allows NA.
std::vector<Formula> enumerate_cdl(const Schema& schema, const AttrSet& attrs, Mode mode,
                                   std::uint64_t max_formulas = kDefaultMaxFormulas);

// Size of the strict-mode enumeration, prod(|V_a| + 1) - 1.
std::uint64_t cdl_size(const Schema& schema, const AttrSet& attrs, Mode mode = Mode::Strict);

// `row` holds one value per attribute of the schema.
bool satisfies(std::span<const ValueId> row, const Formula& p);

ObjectSet meaning_set(const CompleteTable& t, const Formula& p);

Formula object_description(std::span<const ValueId> row, const AttrSet& attrs);

// "(a1=1)&(a2=2)"
std::string render_formula(const Schema& schema, const Formula& p);
// Accepts the rendered form; parentheses and whitespace are optional.
Formula parse_formula(const Schema& schema, std::string_view text, Mode mode = Mode::Strict);

// [{"attr": "a1", "value": "1"}, ...]
nlohmann::json formula_to_json(const Schema& schema, const Formula& p);
Formula formula_from_json(const Schema& schema, const nlohmann::json& j, Mode mode = Mode::Extended);

}  // namespace twd
