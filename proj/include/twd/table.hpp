#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace twd {

using ObjectId = std::size_t;
using AttrId = std::size_t;
// Index into an attribute's domain, or kNa.
using ValueId = std::uint32_t;
inline constexpr ValueId kNa = std::numeric_limits<ValueId>::max();

using ObjectSet = std::set<ObjectId>;
// Attribute subset, sorted ascending by declaration index.
using AttrSet = std::vector<AttrId>;
// Sorted ascending; kNa (if present) is the only member.
using ValueSet = std::vector<ValueId>;

inline constexpr std::uint64_t kDefaultMaxWorlds = std::uint64_t{1} << 20;

struct AttributeSchema {
    std::string name;
    std::vector<std::string> domain;

    std::optional<ValueId> find_value(std::string_view token) const;
    // Domain token, or "NA" for kNa.
    const std::string& value_name(ValueId v) const;
};

// Objects and attributes shared by every table form. Ordering is file order
// for objects and declaration order for attributes and domain values.
struct Schema {
    std::vector<std::string> objects;
    std::vector<AttributeSchema> attributes;

    std::size_t object_count() const noexcept { return objects.size(); }
    std::size_t attribute_count() const noexcept { return attributes.size(); }

    std::optional<ObjectId> find_object(std::string_view name) const;
    std::optional<AttrId> find_attribute(std::string_view name) const;
    ObjectId object(std::string_view name) const;     // throws InvalidArgument
    AttrId attribute(std::string_view name) const;    // throws InvalidArgument

    AttrSet all_attributes() const;
    ObjectSet all_objects() const;

    // Comma separated object names ("x1,x2"); throws InvalidArgument on unknown names.
    ObjectSet parse_objects(std::string_view csv) const;
    AttrSet parse_attributes(std::string_view csv) const;
    std::string object_names(const ObjectSet& s) const;
    std::string attribute_names(const AttrSet& a) const;

    // Throws InvalidArgument if any member is not an object index.
    void check_objects(const ObjectSet& s) const;
    ObjectSet complement(const ObjectSet& s) const;
};

namespace cell {
struct Known { ValueId value; };
struct DoNotCare {};
struct Partial { ValueSet values; };
struct ClassSpecific { AttrId ref; };
struct NotApplicable {};
}  // namespace cell

using Cell = std::variant<cell::Known, cell::DoNotCare, cell::Partial, cell::ClassSpecific,
                          cell::NotApplicable>;

class IncompleteTable {
public:
    IncompleteTable(Schema schema, std::vector<Cell> cells);

    const Schema& schema() const noexcept { return schema_; }
    const Cell& cell(ObjectId x, AttrId a) const { return cells_[x * schema_.attribute_count() + a]; }

private:
    Schema schema_;
    std::vector<Cell> cells_;  // row-major
};

class SetValuedTable {
public:
    SetValuedTable(Schema schema, std::vector<ValueSet> cells);

    const Schema& schema() const noexcept { return schema_; }
    const ValueSet& cell(ObjectId x, AttrId a) const {
        return cells_[x * schema_.attribute_count() + a];
    }

private:
    Schema schema_;
    std::vector<ValueSet> cells_;
};

// One domain value per cell; NA is not admitted.
class CompleteTable {
public:
    // Throws InvalidArgument unless is_complete(st).
    explicit CompleteTable(const SetValuedTable& st);
    CompleteTable(Schema schema, std::vector<ValueId> values);

    const Schema& schema() const noexcept { return schema_; }
    ValueId value(ObjectId x, AttrId a) const { return values_[x * schema_.attribute_count() + a]; }
    std::span<const ValueId> row(ObjectId x) const {
        return {values_.data() + x * schema_.attribute_count(), schema_.attribute_count()};
    }

    SetValuedTable to_set_valued() const;

private:
    Schema schema_;
    std::vector<ValueId> values_;
};

// Reads the `.itab` format. Inferred-domain warnings are appended to
// `warnings` when it is non-null.
IncompleteTable parse_table(std::string_view text, std::vector<std::string>* warnings = nullptr);
IncompleteTable load_table(const std::string& path, std::vector<std::string>* warnings = nullptr);

// Values of attribute `a` that other objects sharing x's (Known) value on the
// referenced attribute take as Known values, in domain order.
ValueSet resolve_class_specific(const IncompleteTable& it, ObjectId x, AttrId a);

SetValuedTable to_set_valued(const IncompleteTable& it);

bool is_complete(const SetValuedTable& st);

// One completed assignment of the selected rows; may contain kNa.
struct World {
    std::vector<ObjectId> rows;
    std::vector<ValueId> values;  // rows.size() x attribute_count, row-major

    ValueId value(std::size_t row_index, AttrId a, std::size_t attribute_count) const {
        return values[row_index * attribute_count + a];
    }
};

// Enumerates every possible world of a set-valued table (optionally
// restricted to a subset of rows) in lexicographic domain order, with the
// last cell varying fastest.
class WorldEnumerator {
public:
    WorldEnumerator(const SetValuedTable& st, std::optional<ObjectSet> rows = std::nullopt,
                    std::uint64_t max_worlds = kDefaultMaxWorlds);

    std::uint64_t count() const noexcept { return count_; }
    // Advances to the next world; false once exhausted.
    bool next();
    const World& current() const noexcept { return world_; }

private:
    const SetValuedTable* st_;
    std::vector<const ValueSet*> cells_;
    std::vector<std::size_t> cursor_;
    World world_;
    std::uint64_t count_ = 1;
    bool started_ = false;
    bool done_ = false;
};

WorldEnumerator possible_worlds(const SetValuedTable& st, std::optional<ObjectSet> rows = std::nullopt,
                                std::uint64_t max_worlds = kDefaultMaxWorlds);

}  // namespace twd
