#include "euphotic/scenario.hpp"

#include "euphotic/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace euphotic {

namespace {

using nlohmann::json;

/// Collects every problem in a document before failing.
class Reader {
public:
    std::vector<std::string> errors;

    void fail(const std::string& where, const std::string& what) { errors.push_back(where + ": " + what); }

    void only_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
        if (!j.is_object()) return;
        std::set<std::string> allowed(keys.begin(), keys.end());
        for (const auto& [k, v] : j.items())
            if (!allowed.count(k)) fail(where, "unknown field '" + k + "'");
    }

    std::optional<std::string> string(const json& j, const std::string& key, const std::string& where, bool required) {
        if (!j.contains(key)) {
            if (required) fail(where, "missing '" + key + "'");
            return std::nullopt;
        }
        if (!j[key].is_string() || j[key].get<std::string>().empty()) {
            fail(where + "." + key, "expected a non-empty string");
            return std::nullopt;
        }
        return j[key].get<std::string>();
    }

    std::optional<Rat> rational(const json& j, const std::string& where) {
        try {
            if (j.is_number_integer()) return Rat(j.get<long long>());
            if (j.is_string()) return Rat::parse(j.get<std::string>());
        } catch (const InputError& e) {
            fail(where, e.what());
            return std::nullopt;
        }
        fail(where, "expected an integer or a rational string");
        return std::nullopt;
    }

    std::optional<RatVec> rat_vector(const json& j, const std::string& where) {
        if (!j.is_array()) {
            fail(where, "expected an array");
            return std::nullopt;
        }
        RatVec out;
        for (std::size_t i = 0; i < j.size(); ++i) {
            auto r = rational(j[i], where + "[" + std::to_string(i) + "]");
            if (!r) return std::nullopt;
            out.push_back(*r);
        }
        return out;
    }

    std::optional<std::vector<int>> int_vector(const json& j, const std::string& where) {
        if (!j.is_array()) {
            fail(where, "expected an array of integers");
            return std::nullopt;
        }
        std::vector<int> out;
        for (const auto& v : j) {
            if (!v.is_number_integer()) {
                fail(where, "expected an array of integers");
                return std::nullopt;
            }
            out.push_back(v.get<int>());
        }
        return out;
    }

    template <class T, class F>
    std::optional<Cited<T>> cited(const json& j, const std::string& where, F&& read) {
        if (!j.is_object() || !j.contains("value")) {
            fail(where, "expected {\"value\": ..., \"cite\": ...}");
            return std::nullopt;
        }
        only_keys(j, where, {"value", "cite"});
        auto cite = string(j, "cite", where, true);
        auto v = read(j["value"], where + ".value");
        if (!cite || !v) return std::nullopt;
        return Cited<T>{*v, *cite};
    }

    std::optional<int> integer(const json& j, const std::string& where) {
        if (!j.is_number_integer()) {
            fail(where, "expected an integer");
            return std::nullopt;
        }
        return j.get<int>();
    }

    std::optional<RootBound> bound(const json& j, const RootSystem& rs, const std::string& where) {
        if (!j.is_object()) {
            fail(where, "expected an object");
            return std::nullopt;
        }
        only_keys(j, where, {"root", "lower", "lower_strict", "upper", "upper_strict"});
        RootBound b;
        if (!j.contains("root")) {
            fail(where, "missing 'root'");
            return std::nullopt;
        }
        auto root = int_vector(j["root"], where + ".root");
        if (!root) return std::nullopt;
        if (static_cast<int>(root->size()) != rs.rank()) {
            fail(where + ".root", "expected " + std::to_string(rs.rank()) + " coefficients");
            return std::nullopt;
        }
        b.root = *root;
        if (j.contains("lower")) b.lower = rational(j["lower"], where + ".lower");
        if (j.contains("upper")) b.upper = rational(j["upper"], where + ".upper");
        b.lower_strict = j.value("lower_strict", false);
        b.upper_strict = j.value("upper_strict", false);
        if (!b.lower && !b.upper) fail(where, "a bound needs 'lower' or 'upper'");
        return b;
    }

    /// Points given as "classical" (e-coordinates) or "values".
    std::optional<RatVec> point(const json& j, const RootSystem& rs, bool classical, const std::string& where) {
        auto v = rat_vector(j, where);
        if (!v) return std::nullopt;
        const int want = classical ? rs.classical_dim() : rs.rank();
        if (static_cast<int>(v->size()) != want) {
            fail(where, "expected " + std::to_string(want) + " coordinates");
            return std::nullopt;
        }
        if (!classical) return v;
        try {
            return rs.from_classical(*v);
        } catch (const InputError& e) {
            fail(where, e.what());
            return std::nullopt;
        }
    }

    /// Returns (classical?, key) for an object holding exactly one of the two
    /// coordinate keys.
    std::optional<std::pair<bool, std::string>> coordinate_key(const json& j, const RootSystem& rs,
                                                               const std::string& where) {
        const bool c = j.contains("classical"), v = j.contains("values");
        if (c == v) {
            fail(where, "give exactly one of 'classical' or 'values'");
            return std::nullopt;
        }
        if (c && !rs.is_classical()) {
            fail(where, "classical coordinates are defined for types A-D only");
            return std::nullopt;
        }
        return std::make_pair(c, std::string(c ? "classical" : "values"));
    }
};

void read_psi(Reader& r, const json& j, const RootSystem& rs, Scenario& s) {
    const std::string where = "psi";
    if (!j.is_object()) {
        r.fail(where, "expected an object");
        return;
    }
    r.only_keys(j, where, {"label", "toral", "table", "cite"});
    s.psi_label = r.string(j, "label", where, false).value_or("");
    const bool toral = j.contains("toral"), tabled = j.contains("table");
    if (toral == tabled) {
        r.fail(where, "give exactly one of 'toral' or 'table'");
        return;
    }
    if (toral) {
        const json& t = j["toral"];
        r.only_keys(t, where + ".toral", {"blocks", "levi"});
        if (!rs.is_classical()) {
            r.fail(where + ".toral", "toral functionals are defined for types A-D only");
            return;
        }
        try {
            if (t.contains("levi")) {
                auto levi = r.int_vector(t["levi"], where + ".toral.levi");
                if (levi) s.psi_toral = psi_for_levi(rs, *levi);
            } else if (t.contains("blocks") && t["blocks"].is_array()) {
                BlockFunctional psi{rs.family(), rs.rank(), {}};
                for (const auto& b : t["blocks"]) {
                    auto label = r.string(b, "label", where + ".toral.blocks", true);
                    auto coords = b.contains("coords") ? r.int_vector(b["coords"], where + ".toral.blocks.coords")
                                                       : std::nullopt;
                    if (!coords) r.fail(where + ".toral.blocks", "missing 'coords'");
                    if (label && coords) psi.blocks.push_back({*label, *coords});
                }
                validate(psi);
                s.psi_toral = psi;
            } else {
                r.fail(where + ".toral", "expected 'blocks' or 'levi'");
            }
        } catch (const InputError& e) {
            r.fail(where + ".toral", e.what());
        }
        return;
    }
    const json& t = j["table"];
    const std::string tw = where + ".table";
    if (!t.is_object()) {
        r.fail(tw, "expected an object");
        return;
    }
    r.only_keys(t, tw, {"dim_Lpsi", "rk_Lpsi", "dim_B_psi", "dim_L_over_Q", "dim_ginv_pi1"});
    PsiTable table;
    auto field = [&](const char* key, std::optional<Cited<int>>& dst) {
        if (t.contains(key))
            dst = r.cited<int>(t[key], tw + "." + key, [&](const json& v, const std::string& w) { return r.integer(v, w); });
    };
    field("dim_Lpsi", table.dim_Lpsi);
    field("rk_Lpsi", table.rk_Lpsi);
    field("dim_B_psi", table.dim_B_psi);
    field("dim_L_over_Q", table.dim_L_over_Q);
    field("dim_ginv_pi1", table.dim_ginv_pi1);
    s.psi_table = table;
}

void read_expected(Reader& r, const json& j, const RootSystem& rs, Scenario& s) {
    r.only_keys(j, "expected", {"dims", "points"});
    if (j.contains("dims"))
        s.expected_dims = r.cited<std::vector<int>>(j["dims"], "expected.dims",
                                                    [&](const json& v, const std::string& w) { return r.int_vector(v, w); });
    if (!j.contains("points")) return;
    if (!j["points"].is_array()) {
        r.fail("expected.points", "expected an array");
        return;
    }
    for (std::size_t i = 0; i < j["points"].size(); ++i) {
        const json& p = j["points"][i];
        const std::string where = "expected.points[" + std::to_string(i) + "]";
        if (!p.is_object()) {
            r.fail(where, "expected an object");
            continue;
        }
        r.only_keys(p, where, {"classical", "values", "cite"});
        PointSet set;
        set.cite = r.string(p, "cite", where, true).value_or("");
        auto key = r.coordinate_key(p, rs, where);
        if (!key) continue;
        if (!p[key->second].is_array()) {
            r.fail(where, "expected an array of points");
            continue;
        }
        for (std::size_t k = 0; k < p[key->second].size(); ++k) {
            auto y = r.point(p[key->second][k], rs, key->first, where + "." + key->second + "[" + std::to_string(k) + "]");
            if (y) set.points.push_back(*y);
        }
        s.expected_points.push_back(std::move(set));
    }
}

} // namespace

RootSystem Scenario::root_system() const { return RootSystem::build(type); }

RatVec Scenario::x_Q_values(const RootSystem& rs) const {
    if (x_Q) return x_Q->value;
    return make_facet(rs, J_Q).barycenter;
}

Scenario parse_scenario(const std::string& json_text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw InputError(origin + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object()) throw InputError(origin + ": a scenario must be a JSON object");

    Reader r;
    Scenario s;
    s.origin = origin;
    r.only_keys(doc, "scenario", {"name", "cite", "group", "facet_P", "facet_Q", "x_Q", "psi", "chi", "rules", "region",
                                  "enumeration", "expected", "annotations"});
    s.name = r.string(doc, "name", "scenario", true).value_or("");
    s.cite = r.string(doc, "cite", "scenario", true).value_or("");

    // The group is needed by everything below.
    if (!doc.contains("group") || !doc["group"].is_object()) throw InputError(origin + ": missing 'group'");
    const json& g = doc["group"];
    r.only_keys(g, "group", {"type", "rank", "lattice"});
    auto type = r.string(g, "type", "group", true);
    std::optional<RootSystem> built;
    if (type) {
        try {
            int rank = g.contains("rank") && g["rank"].is_number_integer() ? g["rank"].get<int>() : 0;
            built = RootSystem::build(*type, rank);
            s.type = built->name();
        } catch (const InputError& e) {
            r.fail("group", e.what());
        }
    }
    if (g.contains("lattice")) {
        try {
            s.lattice = parse_lattice(g.value("lattice", ""));
        } catch (const InputError& e) {
            r.fail("group.lattice", e.what());
        }
    }
    if (!built) {
        std::ostringstream os;
        os << origin << ": invalid scenario";
        for (const auto& e : r.errors) os << "\n  " << e;
        throw InputError(os.str());
    }
    const RootSystem& rs = *built;

    auto facet_J = [&](const char* key) -> std::vector<int> {
        if (!doc.contains(key) || !doc[key].is_object() || !doc[key].contains("J")) {
            r.fail(key, "missing 'J'");
            return {};
        }
        auto J = r.int_vector(doc[key]["J"], std::string(key) + ".J");
        if (!J) return {};
        try {
            return make_facet(rs, *J).J;
        } catch (const InputError& e) {
            r.fail(key, e.what());
            return {};
        }
    };
    if (doc.contains("facet_P")) r.only_keys(doc["facet_P"], "facet_P", {"J"});
    if (doc.contains("facet_Q")) r.only_keys(doc["facet_Q"], "facet_Q", {"J", "label"});
    s.J_P = facet_J("facet_P");
    s.J_Q = facet_J("facet_Q");
    if (doc.contains("facet_Q") && doc["facet_Q"].is_object())
        s.q_label = r.string(doc["facet_Q"], "label", "facet_Q", false).value_or("");
    for (int j : s.J_Q)
        if (std::find(s.J_P.begin(), s.J_P.end(), j) == s.J_P.end())
            r.fail("facet_Q", "J_Q must be contained in J_P (" + std::to_string(j) + " is not)");

    if (doc.contains("x_Q")) {
        const json& x = doc["x_Q"];
        r.only_keys(x, "x_Q", {"classical", "values", "cite"});
        auto cite = r.string(x, "cite", "x_Q", true);
        auto key = r.coordinate_key(x, rs, "x_Q");
        if (key) {
            auto y = r.point(x[key->second], rs, key->first, "x_Q." + key->second);
            if (y && cite) s.x_Q = Cited<RatVec>{*y, *cite};
        }
    }

    if (doc.contains("psi")) read_psi(r, doc["psi"], rs, s);

    if (doc.contains("chi")) {
        const json& c = doc["chi"];
        const bool symbolic = c.is_string() && c.get<std::string>() == "symbolic-generic";
        if (symbolic) {
            s.chi.reset();
        } else if (c.is_object() && c.contains("q") && c.contains("exps")) {
            r.only_keys(c, "chi", {"q", "exps"});
            try {
                s.chi = make_character(c["q"].get<long long>(), c["exps"].get<std::vector<long long>>());
            } catch (const std::exception& e) {
                r.fail("chi", e.what());
            }
        } else {
            r.fail("chi", "expected \"symbolic-generic\" or {\"q\": ..., \"exps\": [...]}");
        }
    }

    if (doc.contains("rules")) {
        std::vector<GradientRule> rules;
        if (!doc["rules"].is_array()) r.fail("rules", "expected an array of gradient sets");
        else
            for (std::size_t i = 0; i < doc["rules"].size(); ++i) {
                GradientRule rule;
                const std::string where = "rules[" + std::to_string(i) + "]";
                if (!doc["rules"][i].is_array()) {
                    r.fail(where, "expected an array of roots");
                    continue;
                }
                for (const auto& root : doc["rules"][i]) {
                    auto v = r.int_vector(root, where);
                    if (!v) continue;
                    if (!rs.index_of(*v)) r.fail(where, "not a root");
                    else rule.push_back(*v);
                }
                rules.push_back(rule);
            }
        s.rules = rules;
    }

    if (doc.contains("region")) {
        if (!doc["region"].is_array()) r.fail("region", "expected an array of bounds");
        else
            for (std::size_t i = 0; i < doc["region"].size(); ++i)
                if (auto b = r.bound(doc["region"][i], rs, "region[" + std::to_string(i) + "]")) s.region.push_back(*b);
    }

    if (doc.contains("enumeration")) {
        const json& e = doc["enumeration"];
        r.only_keys(e, "enumeration", {"bound", "predicates"});
        if (e.contains("bound"))
            if (auto b = r.rational(e["bound"], "enumeration.bound")) s.bound = *b;
        if (e.contains("predicates") && e["predicates"].is_array())
            for (std::size_t i = 0; i < e["predicates"].size(); ++i)
                if (auto b = r.bound(e["predicates"][i], rs, "enumeration.predicates[" + std::to_string(i) + "]"))
                    s.predicates.push_back(*b);
    }

    if (doc.contains("expected")) read_expected(r, doc["expected"], rs, s);

    if (doc.contains("annotations")) {
        if (!doc["annotations"].is_array()) r.fail("annotations", "expected an array of strings");
        else
            for (const auto& a : doc["annotations"]) {
                if (a.is_string()) s.annotations.push_back(a.get<std::string>());
                else r.fail("annotations", "expected an array of strings");
            }
    }

    if (!r.errors.empty()) {
        std::ostringstream os;
        os << origin << ": invalid scenario";
        for (const auto& e : r.errors) os << "\n  " << e;
        throw InputError(os.str());
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read scenario '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str(), path);
}

} // namespace euphotic
