#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "twd/complete_twd.hpp"
#include "twd/degree.hpp"
#include "twd/language.hpp"
#include "twd/table.hpp"

// Brute-force cross-checks written against the definitions with their own
// enumeration and satisfaction code. Only product-kind degrees have a
// possible-world reading; the min kind is never checked here.
namespace twd::oracle {

inline constexpr std::uint64_t kMaxSubsetObjects = 16;

struct OracleReport {
    std::string check;
    std::string inputs;
    std::variant<Degree, bool> expected;
    std::variant<Degree, bool> actual;
    bool pass = false;
};

nlohmann::json to_json(const OracleReport& r);

// Fraction of joint completions of rows x and y (attributes A only) in which
// the two rows agree on every attribute. Requires x != y.
Degree similarity(const SetValuedTable& st, const AttrSet& attrs, ObjectId x, ObjectId y,
                  std::uint64_t max_worlds = kDefaultMaxWorlds);

// Fraction of completions of row x that satisfy p.
Degree sat_degree(const SetValuedTable& st, ObjectId x, const Formula& p,
                  std::uint64_t max_worlds = kDefaultMaxWorlds);

// Every union of members of `family`, found by testing each subset Y of the
// objects for Y == union{F in family : F within Y}.
Family definable_sets(std::size_t object_count, const std::vector<ObjectSet>& family);

// Union closure of the partition blocks equals that of the conjunctively
// definable sets. Both families are rebuilt here from the table.
OracleReport definable_closure(const CompleteTable& t, const AttrSet& attrs);

// On a complete table every alpha-similarity class (alpha in (0,1]) is the
// equivalence class, and the similarity-based description regions are the
// descriptions of the positive and negative classes.
OracleReport classical_reduction(const CompleteTable& t, const AttrSet& attrs, const ObjectSet& x,
                                 const Degree& alpha);

// Replaceable implementations under test, product kind.
struct Hooks {
    std::function<Degree(const SetValuedTable&, const AttrSet&, ObjectId, ObjectId)> similarity;
    std::function<Degree(const SetValuedTable&, ObjectId, const Formula&)> sat_degree;

    static Hooks library();
};

struct RunOptions {
    std::optional<ObjectSet> class_set;  // classical-reduction target; every singleton when absent
    Degree alpha{1, 2};
    std::uint64_t max_worlds = kDefaultMaxWorlds;
    std::uint64_t max_formulas = kDefaultMaxFormulas;
};

// Product similarity for every pair, product satisfiability for every object
// and strict formula, and on complete tables the two set-family checks.
std::vector<OracleReport> run_all(const SetValuedTable& st, const AttrSet& attrs, const RunOptions& opts = {},
                                  const Hooks& hooks = Hooks::library());

}  // namespace twd::oracle
