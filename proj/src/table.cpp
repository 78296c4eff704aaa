#include "twd/table.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "twd/error.hpp"

namespace twd {

// ---------------------------------------------------------------------------
// Schema

std::optional<ValueId> AttributeSchema::find_value(std::string_view token) const {
    for (std::size_t i = 0; i < domain.size(); ++i) {
        if (domain[i] == token) return static_cast<ValueId>(i);
    }
    return std::nullopt;
}

const std::string& AttributeSchema::value_name(ValueId v) const {
    static const std::string na = "NA";
    if (v == kNa) return na;
    return domain.at(v);
}

std::optional<ObjectId> Schema::find_object(std::string_view name) const {
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (objects[i] == name) return i;
    }
    return std::nullopt;
}

std::optional<AttrId> Schema::find_attribute(std::string_view name) const {
    for (std::size_t i = 0; i < attributes.size(); ++i) {
        if (attributes[i].name == name) return i;
    }
    return std::nullopt;
}

ObjectId Schema::object(std::string_view name) const {
    if (auto x = find_object(name)) return *x;
    throw InvalidArgument("unknown object '" + std::string(name) + "'");
}

AttrId Schema::attribute(std::string_view name) const {
    if (auto a = find_attribute(name)) return *a;
    throw InvalidArgument("unknown attribute '" + std::string(name) + "'");
}

AttrSet Schema::all_attributes() const {
    AttrSet out(attributes.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
}

ObjectSet Schema::all_objects() const {
    ObjectSet out;
    for (std::size_t i = 0; i < objects.size(); ++i) out.insert(i);
    return out;
}

namespace {

std::vector<std::string_view> split_csv(std::string_view csv) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        auto comma = csv.find(',', start);
        auto piece = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
        while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
        if (!piece.empty()) out.push_back(piece);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

ObjectSet Schema::parse_objects(std::string_view csv) const {
    ObjectSet out;
    for (auto name : split_csv(csv)) out.insert(object(name));
    return out;
}

AttrSet Schema::parse_attributes(std::string_view csv) const {
    std::set<AttrId> ids;
    for (auto name : split_csv(csv)) ids.insert(attribute(name));
    return {ids.begin(), ids.end()};
}

std::string Schema::object_names(const ObjectSet& s) const {
    std::string out;
    for (auto x : s) {
        if (!out.empty()) out += ',';
        out += objects.at(x);
    }
    return out;
}

std::string Schema::attribute_names(const AttrSet& a) const {
    std::string out;
    for (auto id : a) {
        if (!out.empty()) out += ',';
        out += attributes.at(id).name;
    }
    return out;
}

void Schema::check_objects(const ObjectSet& s) const {
    if (!s.empty() && *s.rbegin() >= objects.size()) throw InvalidArgument("object index out of range");
}

ObjectSet Schema::complement(const ObjectSet& s) const {
    check_objects(s);
    ObjectSet out;
    for (ObjectId x = 0; x < objects.size(); ++x) {
        if (!s.count(x)) out.insert(x);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Tables

IncompleteTable::IncompleteTable(Schema schema, std::vector<Cell> cells)
    : schema_(std::move(schema)), cells_(std::move(cells)) {
    if (cells_.size() != schema_.object_count() * schema_.attribute_count()) {
        throw InvalidArgument("incomplete table: cell count does not match schema");
    }
}

SetValuedTable::SetValuedTable(Schema schema, std::vector<ValueSet> cells)
    : schema_(std::move(schema)), cells_(std::move(cells)) {
    const auto m = schema_.attribute_count();
    if (cells_.size() != schema_.object_count() * m) {
        throw InvalidArgument("set-valued table: cell count does not match schema");
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        auto& c = cells_[i];
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        const auto& attr = schema_.attributes[i % m];
        const auto& obj = schema_.objects[i / m];
        if (c.empty()) {
            throw InvalidArgument("empty cell at (" + obj + ", " + attr.name + ")");
        }
        if (c.back() == kNa && c.size() > 1) {
            throw InvalidArgument("cell (" + obj + ", " + attr.name + ") mixes NA with domain values");
        }
        for (auto v : c) {
            if (v != kNa && v >= attr.domain.size()) {
                throw InvalidArgument("cell (" + obj + ", " + attr.name + ") holds a value outside the domain");
            }
        }
    }
}

CompleteTable::CompleteTable(Schema schema, std::vector<ValueId> values)
    : schema_(std::move(schema)), values_(std::move(values)) {
    const auto m = schema_.attribute_count();
    if (values_.size() != schema_.object_count() * m) {
        throw InvalidArgument("complete table: value count does not match schema");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == kNa || values_[i] >= schema_.attributes[i % m].domain.size()) {
            throw InvalidArgument("complete table: cell (" + schema_.objects[i / m] + ", " +
                                  schema_.attributes[i % m].name + ") is not a domain value");
        }
    }
}

CompleteTable::CompleteTable(const SetValuedTable& st) : schema_(st.schema()) {
    if (!is_complete(st)) throw InvalidArgument("table is not complete");
    const auto n = schema_.object_count();
    const auto m = schema_.attribute_count();
    values_.reserve(n * m);
    for (ObjectId x = 0; x < n; ++x) {
        for (AttrId a = 0; a < m; ++a) values_.push_back(st.cell(x, a).front());
    }
}

SetValuedTable CompleteTable::to_set_valued() const {
    std::vector<ValueSet> cells;
    cells.reserve(values_.size());
    for (auto v : values_) cells.push_back({v});
    return SetValuedTable(schema_, std::move(cells));
}

// ---------------------------------------------------------------------------
// .itab parsing

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

struct RawRow {
    std::size_t line;
    Token id;
    std::vector<Token> cells;
};

bool is_reserved_char(char c) {
    return c == '{' || c == '}' || c == '|' || c == '^' || c == '(' || c == ')' || c == '#';
}

bool valid_value_token(std::string_view t) {
    if (t.empty() || t == "NA" || t == "*") return false;
    return std::none_of(t.begin(), t.end(), is_reserved_char);
}

std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (c == '{') {
            auto close = line.find('}', i);
            if (close == std::string_view::npos) throw ParseError("unterminated '{'", line_no, start + 1);
            i = close + 1;
        } else {
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        }
        std::string text;
        for (char ch : line.substr(start, i - start)) {
            if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
        }
        out.push_back({std::move(text), start + 1});
    }
    return out;
}

std::vector<std::string> partial_members(const Token& tok, std::size_t line_no) {
    // tok.text is "{v1|v2|...}" with whitespace already removed.
    std::vector<std::string> out;
    auto body = std::string_view(tok.text).substr(1, tok.text.size() - 2);
    std::size_t start = 0;
    while (true) {
        auto bar = body.find('|', start);
        auto piece = body.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
        if (!valid_value_token(piece)) {
            throw ParseError("invalid value '" + std::string(piece) + "' in partial cell", line_no, tok.column);
        }
        out.emplace_back(piece);
        if (bar == std::string_view::npos) break;
        start = bar + 1;
    }
    return out;
}

bool all_integers(const std::vector<std::string>& tokens) {
    return std::all_of(tokens.begin(), tokens.end(), [](const std::string& t) {
        long long v = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        return ec == std::errc{} && ptr == t.data() + t.size();
    });
}

}  // namespace

IncompleteTable parse_table(std::string_view text, std::vector<std::string>* warnings) {
    Schema schema;
    bool have_attributes = false;
    bool in_objects = false;
    std::vector<std::optional<std::vector<std::string>>> declared;  // per attribute
    std::vector<RawRow> rows;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto tokens = tokenize(line, line_no);
        if (tokens.empty()) continue;
        const auto& head = tokens.front();

        if (head.text == "@attributes") {
            if (have_attributes) throw ParseError("duplicate @attributes", line_no, head.column);
            if (tokens.size() < 2) throw ParseError("@attributes needs at least one name", line_no, head.column);
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                const auto& t = tokens[i];
                if (!valid_value_token(t.text) || t.text.front() == '@') {
                    throw ParseError("invalid attribute name '" + t.text + "'", line_no, t.column);
                }
                if (schema.find_attribute(t.text)) {
                    throw ParseError("duplicate attribute '" + t.text + "'", line_no, t.column);
                }
                schema.attributes.push_back({t.text, {}});
            }
            declared.resize(schema.attributes.size());
            have_attributes = true;
            continue;
        }
        if (head.text == "@domain") {
            if (!have_attributes) throw ParseError("@domain before @attributes", line_no, head.column);
            if (in_objects) throw ParseError("@domain inside @objects section", line_no, head.column);
            if (tokens.size() < 3) throw ParseError("@domain needs an attribute and at least one value", line_no, head.column);
            auto a = schema.find_attribute(tokens[1].text);
            if (!a) throw ParseError("unknown attribute '" + tokens[1].text + "'", line_no, tokens[1].column);
            if (declared[*a]) throw ParseError("duplicate @domain for '" + tokens[1].text + "'", line_no, tokens[1].column);
            std::vector<std::string> values;
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                const auto& t = tokens[i];
                if (!valid_value_token(t.text)) throw ParseError("invalid domain value '" + t.text + "'", line_no, t.column);
                if (std::find(values.begin(), values.end(), t.text) != values.end()) {
                    throw ParseError("duplicate domain value '" + t.text + "'", line_no, t.column);
                }
                values.push_back(t.text);
            }
            declared[*a] = std::move(values);
            continue;
        }
        if (head.text == "@objects") {
            if (!have_attributes) throw ParseError("@objects before @attributes", line_no, head.column);
            if (in_objects) throw ParseError("duplicate @objects", line_no, head.column);
            if (tokens.size() > 1) throw ParseError("unexpected text after @objects", line_no, tokens[1].column);
            in_objects = true;
            continue;
        }
        if (head.text.front() == '@') throw ParseError("unknown directive '" + head.text + "'", line_no, head.column);
        if (!in_objects) throw ParseError("object row before @objects", line_no, head.column);

        if (!valid_value_token(head.text)) throw ParseError("invalid object id '" + head.text + "'", line_no, head.column);
        if (schema.find_object(head.text)) throw ParseError("duplicate object '" + head.text + "'", line_no, head.column);
        if (tokens.size() - 1 != schema.attribute_count()) {
            throw ParseError("expected " + std::to_string(schema.attribute_count()) + " cells, found " +
                                 std::to_string(tokens.size() - 1),
                             line_no, head.column);
        }
        schema.objects.push_back(head.text);
        rows.push_back({line_no, head, {tokens.begin() + 1, tokens.end()}});
    }

    if (!have_attributes) throw ParseError("missing @attributes", line_no, 1);
    if (!in_objects) throw ParseError("missing @objects", line_no, 1);

    // Domains: declared, or inferred from Known and Partial tokens.
    for (AttrId a = 0; a < schema.attribute_count(); ++a) {
        auto& attr = schema.attributes[a];
        if (declared[a]) {
            attr.domain = *declared[a];
            continue;
        }
        std::vector<std::string> seen;
        for (const auto& row : rows) {
            const auto& tok = row.cells[a];
            if (tok.text == "*") {
                throw ParseError("attribute '" + attr.name + "' uses '*' but has no @domain declaration", row.line,
                                 tok.column);
            }
            std::vector<std::string> members;
            if (tok.text.front() == '{') {
                members = partial_members(tok, row.line);
            } else if (tok.text != "NA" && tok.text.front() != '^') {
                members.push_back(tok.text);
            }
            for (auto& m : members) {
                if (std::find(seen.begin(), seen.end(), m) == seen.end()) seen.push_back(m);
            }
        }
        if (seen.empty()) {
            throw ParseError("cannot infer a domain for attribute '" + attr.name + "'", line_no, 1);
        }
        if (all_integers(seen)) {
            std::sort(seen.begin(), seen.end(),
                      [](const std::string& l, const std::string& r) { return std::stoll(l) < std::stoll(r); });
        } else {
            std::sort(seen.begin(), seen.end());
        }
        attr.domain = seen;
        if (warnings) {
            std::string list;
            for (const auto& v : seen) list += (list.empty() ? "" : " ") + v;
            warnings->push_back("domain of attribute '" + attr.name + "' inferred as {" + list + "}");
        }
    }

    std::vector<Cell> cells;
    cells.reserve(rows.size() * schema.attribute_count());
    for (const auto& row : rows) {
        for (AttrId a = 0; a < schema.attribute_count(); ++a) {
            const auto& tok = row.cells[a];
            const auto& attr = schema.attributes[a];
            const auto& t = tok.text;
            if (t == "*") {
                cells.emplace_back(cell::DoNotCare{});
            } else if (t == "NA") {
                cells.emplace_back(cell::NotApplicable{});
            } else if (t.front() == '{') {
                auto members = partial_members(tok, row.line);
                ValueSet values;
                for (const auto& m : members) {
                    auto v = attr.find_value(m);
                    if (!v) throw ParseError("value '" + m + "' not in domain of '" + attr.name + "'", row.line, tok.column);
                    values.push_back(*v);
                }
                std::sort(values.begin(), values.end());
                if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
                    throw ParseError("duplicate value in partial cell", row.line, tok.column);
                }
                if (values.size() < 2) {
                    throw ParseError("partial cell requires at least 2 values", row.line, tok.column);
                }
                cells.emplace_back(cell::Partial{std::move(values)});
            } else if (t.front() == '^') {
                if (t.size() < 4 || t[1] != '(' || t.back() != ')') {
                    throw ParseError("malformed class-specific cell '" + t + "'", row.line, tok.column);
                }
                auto ref_name = t.substr(2, t.size() - 3);
                auto ref = schema.find_attribute(ref_name);
                if (!ref) throw ParseError("unknown attribute '" + ref_name + "' in class-specific cell", row.line, tok.column);
                if (*ref == a) throw ParseError("class-specific cell references its own attribute", row.line, tok.column);
                cells.emplace_back(cell::ClassSpecific{*ref});
            } else {
                if (!valid_value_token(t)) throw ParseError("invalid cell '" + t + "'", row.line, tok.column);
                auto v = attr.find_value(t);
                if (!v) throw ParseError("value '" + t + "' not in domain of '" + attr.name + "'", row.line, tok.column);
                cells.emplace_back(cell::Known{*v});
            }
        }
    }
    return IncompleteTable(std::move(schema), std::move(cells));
}

IncompleteTable load_table(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open table file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str(), warnings);
}

// ---------------------------------------------------------------------------
// Transformation to set-valued form

ValueSet resolve_class_specific(const IncompleteTable& it, ObjectId x, AttrId a) {
    const auto& schema = it.schema();
    if (x >= schema.object_count() || a >= schema.attribute_count()) {
        throw InvalidArgument("resolve_class_specific: object or attribute out of range");
    }
    const auto* cs = std::get_if<cell::ClassSpecific>(&it.cell(x, a));
    if (!cs) throw InvalidArgument("cell (" + schema.objects[x] + ", " + schema.attributes[a].name + ") is not class-specific");

    const auto* ref = std::get_if<cell::Known>(&it.cell(x, cs->ref));
    if (!ref) {
        throw ResolutionError(ResolutionError::Kind::UnresolvedReference,
                              "class-specific cell (" + schema.objects[x] + ", " + schema.attributes[a].name +
                                  ") references attribute '" + schema.attributes[cs->ref].name +
                                  "', which is not a known value for this object");
    }

    std::set<ValueId> found;
    for (ObjectId y = 0; y < schema.object_count(); ++y) {
        if (y == x) continue;
        const auto* yb = std::get_if<cell::Known>(&it.cell(y, cs->ref));
        const auto* ya = std::get_if<cell::Known>(&it.cell(y, a));
        if (yb && ya && yb->value == ref->value) found.insert(ya->value);
    }
    if (found.empty()) {
        throw ResolutionError(ResolutionError::Kind::EmptyResolution,
                              "class-specific cell (" + schema.objects[x] + ", " + schema.attributes[a].name +
                                  ") has no peer object to resolve from");
    }
    return {found.begin(), found.end()};
}

SetValuedTable to_set_valued(const IncompleteTable& it) {
    const auto& schema = it.schema();
    std::vector<ValueSet> cells;
    cells.reserve(schema.object_count() * schema.attribute_count());
    for (ObjectId x = 0; x < schema.object_count(); ++x) {
        for (AttrId a = 0; a < schema.attribute_count(); ++a) {
            const auto& c = it.cell(x, a);
            if (auto* k = std::get_if<cell::Known>(&c)) {
                cells.push_back({k->value});
            } else if (std::holds_alternative<cell::DoNotCare>(c)) {
                ValueSet all(schema.attributes[a].domain.size());
                for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ValueId>(i);
                cells.push_back(std::move(all));
            } else if (auto* p = std::get_if<cell::Partial>(&c)) {
                cells.push_back(p->values);
            } else if (std::holds_alternative<cell::ClassSpecific>(c)) {
                cells.push_back(resolve_class_specific(it, x, a));
            } else {
                cells.push_back({kNa});
            }
        }
    }
    return SetValuedTable(schema, std::move(cells));
}

bool is_complete(const SetValuedTable& st) {
    const auto& s = st.schema();
    for (ObjectId x = 0; x < s.object_count(); ++x) {
        for (AttrId a = 0; a < s.attribute_count(); ++a) {
            const auto& c = st.cell(x, a);
            if (c.size() != 1 || c.front() == kNa) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Possible worlds

WorldEnumerator::WorldEnumerator(const SetValuedTable& st, std::optional<ObjectSet> rows, std::uint64_t max_worlds)
    : st_(&st) {
    const auto& s = st.schema();
    if (rows) {
        for (auto x : *rows) {
            if (x >= s.object_count()) throw InvalidArgument("possible_worlds: unknown object index");
        }
        world_.rows.assign(rows->begin(), rows->end());
    } else {
        for (ObjectId x = 0; x < s.object_count(); ++x) world_.rows.push_back(x);
    }
    for (auto x : world_.rows) {
        for (AttrId a = 0; a < s.attribute_count(); ++a) {
            const auto& c = st.cell(x, a);
            cells_.push_back(&c);
            if (count_ > max_worlds / c.size()) {
                throw GuardExceeded("possible-world enumeration exceeds the cap of " + std::to_string(max_worlds));
            }
            count_ *= c.size();
        }
    }
    if (count_ > max_worlds) {
        throw GuardExceeded("possible-world enumeration exceeds the cap of " + std::to_string(max_worlds));
    }
    cursor_.assign(cells_.size(), 0);
    world_.values.resize(cells_.size());
}

bool WorldEnumerator::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
    } else {
        std::size_t i = cursor_.size();
        while (i > 0) {
            --i;
            if (++cursor_[i] < cells_[i]->size()) break;
            cursor_[i] = 0;
            if (i == 0) {
                done_ = true;
                return false;
            }
        }
        if (cursor_.empty()) {
            done_ = true;
            return false;
        }
    }
    for (std::size_t i = 0; i < cells_.size(); ++i) world_.values[i] = (*cells_[i])[cursor_[i]];
    return true;
}

WorldEnumerator possible_worlds(const SetValuedTable& st, std::optional<ObjectSet> rows, std::uint64_t max_worlds) {
    return WorldEnumerator(st, std::move(rows), max_worlds);
}

}  // namespace twd
