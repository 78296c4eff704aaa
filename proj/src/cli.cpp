#include "twd/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "twd/complete_twd.hpp"
#include "twd/error.hpp"
#include "twd/rules.hpp"
#include "twd/satisfiability_twd.hpp"
#include "twd/similarity_twd.hpp"

namespace twd::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kMethods = {"eq-complete", "cdl-complete", "alpha-sim",
                                           "approx",      "alpha-meaning", "confidence"};

struct Config {
    std::string table;
    std::string attrs;
    std::string class_list;
    std::string class_column;
    std::string class_value;
    std::string method;
    std::string tnorm;
    std::string alpha;
    std::string format = "text";
    std::string out;
    std::string strip_na;
    std::string formula;
    bool all_subsets = false;
    bool exact = false;
    std::uint64_t max_worlds = kDefaultMaxWorlds;
    std::uint64_t max_formulas = kDefaultMaxFormulas;

    // Set after parsing from option counts.
    bool has_tnorm = false;
    bool has_alpha = false;
    bool strip = false;
};

struct Loaded {
    SetValuedTable st;
    AttrSet attrs;
    std::optional<ObjectSet> cls;
    std::string class_label;
};

bool is_complete_method(const std::string& m) { return m == "eq-complete" || m == "cdl-complete"; }

Loaded load(const Config& cfg, std::ostream& err) {
    std::vector<std::string> warnings;
    auto it = load_table(cfg.table, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    auto st = to_set_valued(it);
    const auto& schema = st.schema();

    std::optional<AttrId> decision;
    if (!cfg.class_column.empty()) decision = schema.attribute(cfg.class_column);

    AttrSet attrs;
    if (cfg.attrs.empty()) {
        for (AttrId a = 0; a < schema.attribute_count(); ++a) {
            if (a != decision) attrs.push_back(a);
        }
    } else {
        attrs = schema.parse_attributes(cfg.attrs);
        if (decision && std::find(attrs.begin(), attrs.end(), *decision) != attrs.end()) {
            throw InvalidArgument("--attrs must not include the class column '" + cfg.class_column + "'");
        }
    }
    if (attrs.empty()) throw InvalidArgument("no condition attributes selected");

    std::optional<ObjectSet> cls;
    std::string label;
    if (!cfg.class_list.empty() && decision) throw InvalidArgument("--class and --class-column are exclusive");
    if (!cfg.class_list.empty()) {
        cls = schema.parse_objects(cfg.class_list);
        label = schema.object_names(*cls);
    } else if (decision) {
        if (cfg.class_value.empty()) throw InvalidArgument("--class-column needs --class-value");
        auto v = schema.attributes[*decision].find_value(cfg.class_value);
        if (!v) throw InvalidArgument("'" + cfg.class_value + "' is not a value of '" + cfg.class_column + "'");
        ObjectSet x;
        for (ObjectId o = 0; o < schema.object_count(); ++o) {
            const auto& c = st.cell(o, *decision);
            if (c.size() != 1) {
                throw InvalidArgument("class column '" + cfg.class_column + "' is not single-valued for object '" +
                                      schema.objects[o] + "'");
            }
            if (c.front() == *v) x.insert(o);
        }
        cls = std::move(x);
        label = cfg.class_column + "=" + cfg.class_value;
    } else if (!cfg.class_value.empty()) {
        throw InvalidArgument("--class-value needs --class-column");
    }
    return {std::move(st), std::move(attrs), std::move(cls), std::move(label)};
}

fuzzy::TNormKind tnorm_of(const Config& cfg) {
    return cfg.has_tnorm ? fuzzy::parse_tnorm(cfg.tnorm) : fuzzy::TNormKind::Min;
}

std::string object_list(const Schema& s, const ObjectSet& x) { return "{" + s.object_names(x) + "}"; }

json object_json(const Schema& s, const ObjectSet& x) {
    auto a = json::array();
    for (auto o : x) a.push_back(s.objects[o]);
    return a;
}

json family_json(const Schema& s, const Family& f) {
    auto a = json::array();
    for (const auto& x : f) a.push_back(object_json(s, x));
    return a;
}

json formulas_json(const Schema& s, const FormulaSet& f) {
    auto a = json::array();
    for (const auto& p : f) a.push_back(formula_to_json(s, p));
    return a;
}

FormulaSet strip_na(const FormulaSet& in, const std::optional<AttrSet>& which) {
    FormulaSet out;
    for (const auto& p : in) {
        std::vector<Atom> kept;
        for (const auto& atom : p.atoms()) {
            bool listed = !which || std::find(which->begin(), which->end(), atom.attr) != which->end();
            if (atom.value == kNa && listed) continue;
            kept.push_back(atom);
        }
        if (!kept.empty()) out.emplace(std::move(kept));
    }
    return out;
}

struct Computed {
    DescriptionRegions regions;
    std::optional<StructuredRegions> structured;
    RuleSet rules;
};

Computed compute(const Config& cfg, const Loaded& in, std::ostream& err) {
    if (cfg.method.empty()) throw InvalidArgument("--method is required");
    if (std::find(kMethods.begin(), kMethods.end(), cfg.method) == kMethods.end()) {
        throw InvalidArgument("unknown method '" + cfg.method + "'");
    }
    if (!in.cls) throw InvalidArgument("a class is required (--class or --class-column/--class-value)");
    const auto& x = *in.cls;

    Computed c;
    Provenance pv{cfg.method, std::nullopt, std::nullopt, in.class_label};
    if (is_complete_method(cfg.method)) {
        if (cfg.has_tnorm) err << "warning: --tnorm is ignored by " << cfg.method << '\n';
        if (cfg.has_alpha) err << "warning: --alpha is ignored by " << cfg.method << '\n';
        if (!is_complete(in.st)) throw InvalidArgument("method " + cfg.method + " needs a complete table");
        CompleteTable t(in.st);
        if (cfg.method == "eq-complete") {
            c.structured = regions_computational(t, in.attrs, x);
            c.regions = description_regions_partition(t, in.attrs, x, cfg.all_subsets);
        } else {
            auto cr = regions_conceptual(t, in.attrs, x, cfg.max_formulas);
            StructuredRegions s;
            for (const auto& d : cr.pos) s.pos.insert(d.members);
            for (const auto& d : cr.neg) s.neg.insert(d.members);
            c.structured = std::move(s);
            c.regions = description_regions_complete(t, in.attrs, x, cfg.max_formulas);
        }
    } else {
        if (!cfg.has_alpha) throw InvalidArgument("method " + cfg.method + " needs --alpha");
        auto alpha = Degree::parse(cfg.alpha);
        auto kind = tnorm_of(cfg);
        pv.tnorm = kind;
        pv.alpha = alpha;
        if (cfg.method == "alpha-sim") {
            c.regions = description_regions_alpha_sim(in.st, in.attrs, alpha, x, kind, cfg.max_formulas);
        } else if (cfg.method == "approx") {
            c.regions = description_regions_approx(in.st, in.attrs, alpha, x, kind, cfg.max_formulas);
        } else if (cfg.method == "alpha-meaning") {
            c.regions = description_regions_alpha_meaning(in.st, in.attrs, alpha, x, kind, cfg.max_formulas);
        } else {
            c.regions = description_regions_confidence(in.st, in.attrs, alpha, x, kind, cfg.max_formulas);
        }
    }

    auto dpos = c.regions.dpos;
    auto dneg = c.regions.dneg;
    if (cfg.strip) {
        std::optional<AttrSet> which;
        if (!cfg.strip_na.empty()) which = in.st.schema().parse_attributes(cfg.strip_na);
        dpos = strip_na(dpos, which);
        dneg = strip_na(dneg, which);
    }
    c.rules = derive_rules(dpos, dneg, pv);
    return c;
}

std::string cmd_regions(const Config& cfg, const Loaded& in, std::ostream& err) {
    auto c = compute(cfg, in, err);
    const auto& s = in.st.schema();
    std::ostringstream os;
    if (cfg.format == "json") {
        json j;
        if (c.structured) {
            j["pos"] = family_json(s, c.structured->pos);
            j["neg"] = family_json(s, c.structured->neg);
            if (cfg.method == "eq-complete") j["bnd"] = family_json(s, c.structured->bnd);
        }
        j["dpos"] = formulas_json(s, c.regions.dpos);
        j["dneg"] = formulas_json(s, c.regions.dneg);
        j["rules"] = render_json(s, c.rules);
        os << j.dump(2) << '\n';
        return os.str();
    }
    auto family_line = [&](const char* name, const Family& f) {
        os << name << ':';
        for (const auto& x : f) os << ' ' << object_list(s, x);
        os << '\n';
    };
    if (c.structured) {
        family_line("pos", c.structured->pos);
        family_line("neg", c.structured->neg);
        if (cfg.method == "eq-complete") family_line("bnd", c.structured->bnd);
    }
    os << "dpos (" << c.regions.dpos.size() << "):\n";
    for (const auto& p : c.regions.dpos) os << "  " << render_formula(s, p) << '\n';
    os << "dneg (" << c.regions.dneg.size() << "):\n";
    for (const auto& p : c.regions.dneg) os << "  " << render_formula(s, p) << '\n';
    os << "rules:\n" << render_text(s, c.rules);
    return os.str();
}

std::string cmd_rules(const Config& cfg, const Loaded& in, std::ostream& err) {
    auto c = compute(cfg, in, err);
    const auto& s = in.st.schema();
    if (cfg.format == "json") return render_json(s, c.rules).dump(2) + "\n";
    return render_text(s, c.rules);
}

std::string cmd_similarity(const Config& cfg, const Loaded& in) {
    const auto& s = in.st.schema();
    auto kind = tnorm_of(cfg);
    SimilarityMatrix m(in.st, in.attrs, kind);
    const auto n = s.object_count();
    if (cfg.format == "json") {
        json j;
        j["tnorm"] = std::string(fuzzy::to_string(kind));
        j["attrs"] = json::array();
        for (auto a : in.attrs) j["attrs"].push_back(s.attributes[a].name);
        j["objects"] = s.objects;
        j["matrix"] = json::array();
        for (ObjectId x = 0; x < n; ++x) {
            auto row = json::array();
            for (ObjectId y = 0; y < n; ++y) row.push_back(m(x, y).to_fraction());
            j["matrix"].push_back(std::move(row));
        }
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    for (ObjectId x = 0; x < n; ++x) {
        cells[0][x + 1] = cells[x + 1][0] = s.objects[x];
        for (ObjectId y = 0; y < n; ++y) {
            cells[x + 1][y + 1] = cfg.exact ? m(x, y).to_fraction() : m(x, y).to_decimal(3);
        }
    }
    std::size_t width = 0;
    for (const auto& r : cells) {
        for (const auto& c : r) width = std::max(width, c.size());
    }
    std::ostringstream os;
    for (const auto& r : cells) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            auto text = r[i];
            if (i > 0) line += "  ";
            line += text + std::string(width - text.size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

std::string cmd_satisfiability(const Config& cfg, const Loaded& in) {
    const auto& s = in.st.schema();
    std::vector<fuzzy::TNormKind> kinds;
    if (cfg.has_tnorm) {
        kinds.push_back(fuzzy::parse_tnorm(cfg.tnorm));
    } else {
        kinds = {fuzzy::TNormKind::Min, fuzzy::TNormKind::Product};
    }
    std::optional<Degree> alpha;
    if (cfg.has_alpha) alpha = Degree::parse(cfg.alpha);
    std::optional<Formula> only;
    if (!cfg.formula.empty()) only = parse_formula(s, cfg.formula);

    auto formulas = enumerate_cdl(s, in.attrs, Mode::Strict, cfg.max_formulas);
    json listing = json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const auto& p = formulas[i];
        if (only && p != *only) continue;
        std::string label = "p" + std::to_string(i + 1);
        json item{{"label", label}, {"formula", formula_to_json(s, p)}};
        os << label << "  " << render_formula(s, p);
        for (auto kind : kinds) {
            auto profile = sat_profile(in.st, p, kind);
            auto name = std::string(fuzzy::to_string(kind));
            json degrees = json::object();
            os << "  " << name << ":";
            bool any = false;
            for (ObjectId x = 0; x < s.object_count(); ++x) {
                const auto& d = profile.degrees[x];
                if (d == Degree::zero()) continue;
                degrees[s.objects[x]] = d.to_fraction();
                os << (any ? ", " : " ") << (cfg.exact ? d.to_fraction() : d.to_decimal(3)) << "/" << s.objects[x];
                any = true;
            }
            if (!any) os << " -";
            item["degrees"][name] = std::move(degrees);
            if (alpha) {
                auto m = alpha_meaning_set(profile, *alpha);
                item["alpha_meaning"][name] = object_json(s, m);
                os << "  m[" << name << "]=" << object_list(s, m);
            }
            if (in.cls) {
                auto c = confidence(profile, *in.cls);
                item["ac"][name] = c.ac.to_fraction();
                item["rc"][name] = c.rc.to_fraction();
                auto show = [&](const Degree& d) { return cfg.exact ? d.to_fraction() : d.to_decimal(3); };
                os << "  AC[" << name << "]=" << show(c.ac) << " RC[" << name << "]=" << show(c.rc);
            }
        }
        os << '\n';
        listing.push_back(std::move(item));
    }
    if (only && listing.empty()) throw InvalidArgument("--formula is not a formula over the selected attributes");
    if (cfg.format == "json") return listing.dump(2) + "\n";
    return os.str();
}

std::string cmd_oracle(const Config& cfg, const Loaded& in, const oracle::Hooks& hooks, bool& failed) {
    oracle::RunOptions opts;
    opts.class_set = in.cls;
    if (cfg.has_alpha) opts.alpha = Degree::parse(cfg.alpha);
    opts.max_worlds = cfg.max_worlds;
    opts.max_formulas = cfg.max_formulas;
    auto reports = oracle::run_all(in.st, in.attrs, opts, hooks);

    failed = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
    if (cfg.format == "json") {
        auto a = json::array();
        for (const auto& r : reports) a.push_back(oracle::to_json(r));
        return a.dump(2) + "\n";
    }
    std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // check -> (total, failed)
    std::ostringstream os;
    for (const auto& r : reports) {
        auto& [total, bad] = tally[r.check];
        ++total;
        if (!r.pass) {
            ++bad;
            auto j = oracle::to_json(r);
            os << "FAIL " << r.check << " " << r.inputs << " expected=" << j["expected"].get<std::string>()
               << " actual=" << j["actual"].get<std::string>() << '\n';
        }
    }
    for (const auto& [check, counts] : tally) {
        os << check << ": " << counts.first - counts.second << "/" << counts.first << " passed\n";
    }
    os << (failed ? "oracle check FAILED\n" : "all oracle checks passed\n");
    return os.str();
}

void add_common(CLI::App* sub, Config& cfg, bool needs_method) {
    sub->add_option("--table", cfg.table, "Path to an .itab table")->required();
    sub->add_option("--attrs", cfg.attrs, "Comma-separated condition attributes (default: all)");
    sub->add_option("--class", cfg.class_list, "Comma-separated object ids forming the target class");
    sub->add_option("--class-column", cfg.class_column, "Decision attribute defining the class");
    sub->add_option("--class-value", cfg.class_value, "Decision value selecting the class");
    sub->add_option("--tnorm", cfg.tnorm, "min | prod");
    sub->add_option("--alpha", cfg.alpha, "Threshold, decimal or fraction");
    sub->add_option("--format", cfg.format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
    sub->add_option("--max-worlds", cfg.max_worlds, "Cap on enumerated possible worlds");
    sub->add_option("--max-formulas", cfg.max_formulas, "Cap on enumerated formulas");
    if (needs_method) {
        sub->add_option("--method", cfg.method, "eq-complete | cdl-complete | alpha-sim | approx | alpha-meaning | confidence")
            ->required();
        sub->add_option("--strip-na-atoms", cfg.strip_na, "Drop NA atoms from rules (optionally only for these attributes)")
            ->expected(0, 1);
        sub->add_flag("--all-subsets", cfg.all_subsets, "eq-complete: combine the rules of every attribute subset");
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const oracle::Hooks* hooks) {
    CLI::App app{"Three-way decision rule induction from complete and incomplete tables", "twd"};
    app.require_subcommand(1);
    Config cfg;
    auto* regions = app.add_subcommand("regions", "Description regions and the rules they induce");
    auto* rules = app.add_subcommand("rules", "Three-way decision rules");
    auto* similarity = app.add_subcommand("similarity", "Similarity matrix");
    auto* satisfiability = app.add_subcommand("satisfiability", "Satisfiability degrees of formulas");
    auto* oracle_check = app.add_subcommand("oracle-check", "Brute-force cross-checks");
    add_common(regions, cfg, true);
    add_common(rules, cfg, true);
    add_common(similarity, cfg, false);
    add_common(satisfiability, cfg, false);
    add_common(oracle_check, cfg, false);
    similarity->add_flag("--exact", cfg.exact, "Print exact fractions");
    satisfiability->add_flag("--exact", cfg.exact, "Print exact fractions");
    satisfiability->add_option("--formula", cfg.formula, "Only this formula, e.g. (a1=0)&(a3=1)");

    std::vector<std::string> argv_store{"twd"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInvalidConfig;
    }

    auto* sub = app.get_subcommands().front();
    cfg.has_tnorm = sub->count("--tnorm") > 0;
    cfg.has_alpha = sub->count("--alpha") > 0;
    cfg.strip = sub->get_option_no_throw("--strip-na-atoms") && sub->count("--strip-na-atoms") > 0;

    try {
        auto in = load(cfg, err);
        std::string doc;
        bool failed = false;
        if (sub == regions) {
            doc = cmd_regions(cfg, in, err);
        } else if (sub == rules) {
            doc = cmd_rules(cfg, in, err);
        } else if (sub == similarity) {
            doc = cmd_similarity(cfg, in);
        } else if (sub == satisfiability) {
            doc = cmd_satisfiability(cfg, in);
        } else {
            doc = cmd_oracle(cfg, in, hooks ? *hooks : oracle::Hooks::library(), failed);
        }
        if (cfg.out.empty()) {
            out << doc;
        } else {
            std::ofstream f(cfg.out, std::ios::binary);
            if (!f) throw InvalidArgument("cannot write '" + cfg.out + "'");
            f << doc;
        }
        return failed ? kOracleFailure : kOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const ResolutionError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kGuardExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidConfig;
    }
}

}  // namespace twd::cli
