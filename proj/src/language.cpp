#include "twd/language.hpp"

#include <algorithm>
#include <cctype>

#include "twd/error.hpp"

namespace twd {

Formula::Formula(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw InvalidArgument("formula needs at least one atom");
    std::sort(atoms_.begin(), atoms_.end());
    for (std::size_t i = 1; i < atoms_.size(); ++i) {
        if (atoms_[i].attr == atoms_[i - 1].attr) throw InvalidArgument("formula repeats an attribute");
    }
}

bool Formula::has_na() const {
    return std::any_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.value == kNa; });
}

AttrSet Formula::attributes() const {
    AttrSet out;
    for (const auto& a : atoms_) out.push_back(a.attr);
    return out;
}

std::strong_ordering operator<=>(const Formula& p, const Formula& q) {
    if (auto c = p.atoms_.size() <=> q.atoms_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(p.atoms_.begin(), p.atoms_.end(), q.atoms_.begin(),
                                                  q.atoms_.end());
}

Formula conjoin(const Formula& p, const Formula& q) {
    auto atoms = p.atoms();
    atoms.insert(atoms.end(), q.atoms().begin(), q.atoms().end());
    return Formula(std::move(atoms));
}

namespace {

void check_attrs(const Schema& schema, const AttrSet& attrs) {
    if (attrs.empty()) throw InvalidArgument("attribute subset must be nonempty");
    for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (attrs[i] >= schema.attribute_count()) throw InvalidArgument("attribute index out of range");
        if (i > 0 && attrs[i] <= attrs[i - 1]) throw InvalidArgument("attribute subset must be sorted and distinct");
    }
}

std::vector<ValueId> alphabet(const AttributeSchema& attr, Mode mode) {
    std::vector<ValueId> out(attr.domain.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<ValueId>(i);
    if (mode == Mode::Extended) out.push_back(kNa);
    return out;
}

}  // namespace

std::uint64_t cdl_size(const Schema& schema, const AttrSet& attrs, Mode mode) {
    check_attrs(schema, attrs);
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t n = 1;
    for (auto a : attrs) {
        std::uint64_t k = schema.attributes[a].domain.size() + (mode == Mode::Extended ? 2 : 1);
        n = n > cap / k ? cap : n * k;
    }
    return n == cap ? cap : n - 1;
}

std::vector<Formula> enumerate_cdl(const Schema& schema, const AttrSet& attrs, Mode mode,
                                   std::uint64_t max_formulas) {
    auto n = cdl_size(schema, attrs, mode);
    if (n > max_formulas) {
        throw GuardExceeded("description language has " + std::to_string(n) + " formulas, over the cap of " +
                            std::to_string(max_formulas));
    }
    std::vector<std::vector<ValueId>> letters;
    for (auto a : attrs) letters.push_back(alphabet(schema.attributes[a], mode));

    // Each attribute is either absent (index 0) or takes letters[i][choice-1].
    std::vector<Formula> out;
    out.reserve(n);
    std::vector<std::size_t> choice(attrs.size(), 0);
    auto advance = [&] {
        for (std::size_t i = choice.size(); i-- > 0;) {
            if (++choice[i] <= letters[i].size()) return true;
            choice[i] = 0;
        }
        return false;
    };
    while (advance()) {
        std::vector<Atom> atoms;
        for (std::size_t j = 0; j < choice.size(); ++j) {
            if (choice[j] > 0) atoms.push_back({attrs[j], letters[j][choice[j] - 1]});
        }
        out.emplace_back(std::move(atoms));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool satisfies(std::span<const ValueId> row, const Formula& p) {
    for (const auto& atom : p.atoms()) {
        if (atom.attr >= row.size()) throw InvalidArgument("row does not cover the formula's attributes");
        if (row[atom.attr] != atom.value) return false;
    }
    return true;
}

ObjectSet meaning_set(const CompleteTable& t, const Formula& p) {
    ObjectSet out;
    for (ObjectId x = 0; x < t.schema().object_count(); ++x) {
        if (satisfies(t.row(x), p)) out.insert(x);
    }
    return out;
}

Formula object_description(std::span<const ValueId> row, const AttrSet& attrs) {
    if (attrs.empty()) throw InvalidArgument("attribute subset must be nonempty");
    std::vector<Atom> atoms;
    for (auto a : attrs) {
        if (a >= row.size()) throw InvalidArgument("row does not cover the attribute subset");
        atoms.push_back({a, row[a]});
    }
    return Formula(std::move(atoms));
}

std::string render_formula(const Schema& schema, const Formula& p) {
    std::string out;
    for (const auto& atom : p.atoms()) {
        if (!out.empty()) out += '&';
        const auto& attr = schema.attributes.at(atom.attr);
        out += '(' + attr.name + '=' + attr.value_name(atom.value) + ')';
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Atom make_atom(const Schema& schema, std::string_view name, std::string_view value, Mode mode) {
    auto a = schema.find_attribute(name);
    if (!a) throw InvalidArgument("unknown attribute '" + std::string(name) + "' in formula");
    const auto& attr = schema.attributes[*a];
    if (value == "NA") {
        if (mode != Mode::Extended) throw InvalidArgument("NA is not a formula value here");
        return {*a, kNa};
    }
    auto v = attr.find_value(value);
    if (!v) throw InvalidArgument("value '" + std::string(value) + "' not in domain of '" + attr.name + "'");
    return {*a, *v};
}

}  // namespace

Formula parse_formula(const Schema& schema, std::string_view text, Mode mode) {
    std::vector<Atom> atoms;
    std::size_t start = 0;
    while (true) {
        auto amp = text.find('&', start);
        auto piece = trim(text.substr(start, amp == std::string_view::npos ? std::string_view::npos : amp - start));
        if (!piece.empty() && piece.front() == '(') {
            if (piece.back() != ')') throw InvalidArgument("unbalanced parenthesis in '" + std::string(piece) + "'");
            piece = trim(piece.substr(1, piece.size() - 2));
        }
        auto eq = piece.find('=');
        if (eq == std::string_view::npos) throw InvalidArgument("expected attr=value, got '" + std::string(piece) + "'");
        atoms.push_back(make_atom(schema, trim(piece.substr(0, eq)), trim(piece.substr(eq + 1)), mode));
        if (amp == std::string_view::npos) break;
        start = amp + 1;
    }
    return Formula(std::move(atoms));
}

nlohmann::json formula_to_json(const Schema& schema, const Formula& p) {
    auto out = nlohmann::json::array();
    for (const auto& atom : p.atoms()) {
        const auto& attr = schema.attributes.at(atom.attr);
        out.push_back({{"attr", attr.name}, {"value", attr.value_name(atom.value)}});
    }
    return out;
}

Formula formula_from_json(const Schema& schema, const nlohmann::json& j, Mode mode) {
    if (!j.is_array()) throw InvalidArgument("formula JSON must be an array");
    std::vector<Atom> atoms;
    for (const auto& item : j) {
        atoms.push_back(make_atom(schema, item.at("attr").get<std::string>(), item.at("value").get<std::string>(), mode));
    }
    return Formula(std::move(atoms));
}

}  // namespace twd
