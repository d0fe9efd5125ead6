#include "euphotic/commands.hpp"

#include "euphotic/errors.hpp"
#include "euphotic/span_lemma.hpp"
#include "euphotic/spherical.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace euphotic {

namespace {

Json rat_json(const Rat& r) { return r.str(); }

Json ratvec_json(const RatVec& v) {
    Json out = Json::array();
    for (const auto& r : v) out.push_back(r.str());
    return out;
}

Json root_json(const RootSystem& rs, std::size_t k) { return rs.root(k); }

Json header(const std::string& command) {
    Json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    return j;
}

Json group_json(const RootSystem& rs) {
    Json j;
    j["type"] = rs.name();
    j["rank"] = rs.rank();
    return j;
}

Json bound_json(const RootBound& b) {
    Json j;
    j["root"] = b.root;
    if (b.lower) {
        j["lower"] = b.lower->str();
        j["lower_strict"] = b.lower_strict;
    }
    if (b.upper) {
        j["upper"] = b.upper->str();
        j["upper_strict"] = b.upper_strict;
    }
    j["text"] = b.describe();
    return j;
}

Json checks_json(const std::vector<Check>& checks) {
    Json out = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["detail"] = c.detail;
        out.push_back(j);
    }
    return out;
}

bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string resolve_label(const RootSystem& rs, const std::string& text) {
    if (text == "n") return "P_" + std::to_string(rs.rank());
    if (!text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return "P_" + text;
    return text;
}

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else if (j.is_string()) {
        os << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

} // namespace

Json point_json(const RootSystem& rs, const RatVec& y) {
    Json j;
    j["values"] = ratvec_json(y);
    if (rs.is_classical()) j["classical"] = ratvec_json(rs.to_classical(y));
    return j;
}

Json affine_root_json(const RootSystem& rs, const AffineRoot& a) {
    Json j;
    j["gradient"] = root_json(rs, a.gradient);
    j["level"] = a.level;
    return j;
}

CommandResult cmd_facet(const RootSystem& rs, const std::vector<int>& J) {
    const Facet f = make_facet(rs, J);
    const GradingReport g = grade(rs, f);
    Json j = header("facet");
    j["group"] = group_json(rs);
    j["J"] = f.J;
    j["m"] = f.m;
    j["hyperspecial"] = f.hyperspecial();
    j["barycenter"] = point_json(rs, f.barycenter);
    j["dims"] = g.dims;
    j["levi_roots"] = g.levi_roots.size();
    j["vp_weights"] = g.vp_weights.size();
    j["vp_has_cartan"] = g.vp_has_cartan;
    return {j, true};
}

CommandResult cmd_grade(const RootSystem& rs, const std::vector<int>& J) {
    const Facet f = make_facet(rs, J);
    const GradingReport g = grade(rs, f);
    Json j = header("grade");
    j["group"] = group_json(rs);
    j["J"] = f.J;
    j["m"] = g.m;
    j["barycenter"] = point_json(rs, f.barycenter);
    j["dims"] = g.dims;
    j["vp_has_cartan"] = g.vp_has_cartan;
    auto roots = [&](const std::vector<AffineRoot>& v) {
        Json out = Json::array();
        for (const auto& a : v) out.push_back(affine_root_json(rs, a));
        return out;
    };
    j["levi_roots"] = roots(g.levi_roots);
    j["vp_weights"] = roots(g.vp_weights);
    j["vp_dual_weights"] = roots(g.vp_dual_weights);
    return {j, true};
}

bool survives_gates(const HessenbergDatum& d) {
    return !d.halfspace_empty && !d.rule_empty.value_or(false) && !d.simple_root_meager.value_or(false) &&
           !d.exceptional;
}

CommandResult cmd_hessenberg(const Scenario& s, std::optional<Rat> bound) {
    const RootSystem rs = s.root_system();
    const Facet fp = make_facet(rs, s.J_P);
    const RatVec xq = s.x_Q_values(rs);
    EnumerationOptions opts;
    opts.lattice = s.lattice;
    opts.bound = bound.value_or(s.bound);
    opts.predicates = s.predicates;
    opts.rules = s.rules;
    const EnumerationResult res = enumerate_candidates(rs, fp, xq, opts);

    Json j = header("hessenberg");
    j["scenario"] = s.name;
    j["cite"] = s.cite;
    j["group"] = group_json(rs);
    j["lattice"] = lattice_name(s.lattice);
    j["J_P"] = s.J_P;
    j["J_Q"] = s.J_Q;
    j["x_Q"] = point_json(rs, xq);
    if (s.x_Q) j["x_Q_cite"] = s.x_Q->cite;
    j["bound"] = rat_json(opts.bound);
    Json preds = Json::array();
    for (const auto& b : s.predicates) preds.push_back(bound_json(b));
    j["predicates"] = preds;
    j["dominant_points"] = res.dominant_points;
    j["cosets"] = res.cosets;
    j["filtered"] = res.filtered;
    Json base = Json::array();
    for (const auto& b : res.base_points) base.push_back(point_json(rs, b));
    j["exceptional_base_points"] = base;

    std::vector<Check> checks;
    std::vector<std::string> outside;
    Json table = Json::array();
    std::set<RatVec> ys;
    for (const auto& d : res.data) {
        ys.insert(d.y);
        Json row;
        row["y"] = point_json(rs, d.y);
        row["witness"] = {{"w", d.witness.w}, {"lambda", ratvec_json(d.witness.lambda)}};
        Json grads = Json::array();
        for (std::size_t k : d.vw_perp_gradients) grads.push_back(root_json(rs, k));
        row["vw_perp_gradients"] = grads;
        row["zero_weight"] = d.zero_weight;
        row["qw_roots"] = d.qw_roots.size();
        row["halfspace_empty"] = d.halfspace_empty;
        if (d.halfspace_witness) row["halfspace_witness"] = ratvec_json(*d.halfspace_witness);
        if (d.simple_root_meager) row["simple_root_meager"] = *d.simple_root_meager;
        if (d.rule_empty) row["rule_empty"] = *d.rule_empty;
        row["exceptional"] = d.exceptional;
        row["survives"] = survives_gates(d);
        if (!s.region.empty()) {
            const bool in = in_region(rs, s.region, d.y);
            row["in_region"] = in;
            if (survives_gates(d) && !in) outside.push_back(to_string(d.y));
        }
        table.push_back(row);
    }
    j["data"] = table;

    if (!s.region.empty()) {
        Json region = Json::array();
        for (const auto& b : s.region) region.push_back(bound_json(b));
        j["region"] = region;
        std::string detail = outside.empty() ? "all survivors in region" : "outside:";
        for (const auto& p : outside) detail += " " + p;
        checks.push_back({"survivors_in_region", outside.empty(), detail});
    }
    for (const auto& set : s.expected_points) {
        std::vector<std::string> missing;
        for (const auto& p : set.points) {
            const RatVec c = facet_canonical(rs, fp.J, p).first;
            if (!ys.count(c)) missing.push_back(to_string(rs.is_classical() ? rs.to_classical(p) : p));
        }
        std::string detail = std::to_string(set.points.size() - missing.size()) + "/" +
                             std::to_string(set.points.size()) + " enumerated (" + set.cite + ")";
        for (const auto& p : missing) detail += " missing " + p;
        checks.push_back({"expected_points_enumerated", missing.empty(), detail});
    }
    j["checks"] = checks_json(checks);
    j["passed"] = all_passed(checks);
    return {j, all_passed(checks)};
}

CommandResult cmd_audit(const Scenario& s) {
    const AuditReport a = audit(s);
    Json j = header("audit");
    j["scenario"] = s.name;
    j["cite"] = s.cite;
    j["group"] = a.type;
    j["J_P"] = a.J_P;
    j["J_Q"] = a.J_Q;
    if (!s.q_label.empty()) j["q_label"] = s.q_label;
    if (!s.psi_label.empty()) j["psi_label"] = s.psi_label;
    j["psi_kind"] = s.psi_toral ? "toral" : "table";
    j["chi"] = s.chi ? "explicit" : "symbolic-generic";
    j["m"] = a.m;
    j["dims"] = a.dims;
    Json in;
    in["dim_L"] = a.inputs.dim_L;
    in["dim_LQ"] = a.inputs.dim_LQ;
    in["dim_Lpsi"] = a.inputs.dim_Lpsi;
    in["rk_Lpsi"] = a.inputs.rk_Lpsi;
    in["dim_ginv_pi1"] = a.inputs.dim_ginv_pi1;
    j["inputs"] = in;
    Json prov;
    for (const auto& [k, v] : a.inputs.provenance) prov[k] = v;
    j["provenance"] = prov;
    j["swan"] = a.swan;
    if (a.swan_direct) j["swan_direct"] = *a.swan_direct;
    j["dim_L_over_Q"] = a.dim_L_over_Q;
    j["dim_B_psi"] = a.dim_B_psi;
    j["open_orbit"] = a.open_orbit;
    j["rigidity_sum"] = a.rigidity_sum;
    j["checks"] = checks_json(a.checks);
    j["annotations"] = a.annotations;
    j["passed"] = a.passed();
    return {j, a.passed()};
}

CommandResult cmd_classify(Family family, int min_rank, int max_rank) {
    if (min_rank < 1 || min_rank > max_rank) throw InputError("classify: invalid rank range");
    const auto all = enumerate_dim_eq(family, max_rank);
    Json j = header("classify");
    j["type"] = family_name(family);
    j["spherical_data_version"] = spherical_data_version();
    std::vector<Check> checks;
    Json ranks = Json::array();
    for (int rank = std::max(min_rank, min_listed_rank(family)); rank <= max_rank; ++rank) {
        Json r;
        r["rank"] = rank;
        const PaperList listed = paper_list(family, rank);
        if (!listed.note.empty()) r["note"] = listed.note;
        std::set<std::pair<std::string, std::string>> found;
        Json pairs = Json::array();
        for (const auto& p : all) {
            if (p.rank != rank) continue;
            found.insert({p.psi.label, p.q.label});
            Json e;
            e["psi"] = p.psi.label;
            e["q"] = p.q.label;
            e["psi_levi"] = p.psi.levi;
            e["q_levi"] = p.q.levi;
            e["dim_Gpsi"] = p.dims.dim_Gpsi;
            e["dim_LQ"] = p.dims.dim_LQ;
            e["num_roots"] = p.dims.num_roots;
            e["status"] = p.in_paper_list ? "listed" : "dim-eq only";
            if (p.in_paper_list) e["cite"] = p.paper_case;
            pairs.push_back(e);
        }
        std::vector<std::string> missing;
        for (const auto& p : listed.pairs)
            if (!found.count({p.psi.label, p.q.label})) missing.push_back(p.psi.label + "/" + p.q.label);
        r["pairs"] = pairs;
        r["listed"] = listed.pairs.size();
        std::string detail = std::to_string(listed.pairs.size() - missing.size()) + "/" +
                             std::to_string(listed.pairs.size()) + " listed pairs enumerated";
        for (const auto& m : missing) detail += " missing " + m;
        checks.push_back({family_name(family) + std::to_string(rank) + "_list_contained", missing.empty(), detail});
        ranks.push_back(r);
    }
    j["ranks"] = ranks;
    j["checks"] = checks_json(checks);
    j["passed"] = all_passed(checks);
    return {j, all_passed(checks)};
}

CommandResult cmd_chargen(CharKind kind, int n, long long q, const std::vector<long long>& exps) {
    Json j = header("chargen");
    j["kind"] = kind == CharKind::A ? "A" : "BCD";
    j["q"] = q;
    if (exps.empty()) {
        if (!is_prime_power(q)) throw InputError("q must be a prime power");
        j["n"] = n;
        j["generic_count"] = count_generic(kind, n, q);
        return {j, true};
    }
    const CharacterTuple chi = make_character(q, exps);
    const GenericityResult r = kind == CharKind::A ? is_generic_A(chi) : is_generic_BCD(chi);
    j["exps"] = chi.exps;
    j["generic"] = r.generic;
    Json v = Json::array();
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
        Json e;
        e["I"] = r.violations[i];
        if (kind == CharKind::BCD) e["J"] = r.violations_j[i];
        v.push_back(e);
    }
    j["violations"] = v;
    return {j, true};
}

CommandResult cmd_spancheck(const RootSystem& rs, const std::string& psi, const std::string& q) {
    const ParabolicSpec ps = parse_spec(rs, resolve_label(rs, psi));
    const ParabolicSpec qs = parse_spec(rs, resolve_label(rs, q));
    const SpanLemmaReport rep = verify_span_lemma(rs, ps.levi, qs.levi);
    Json j = header("spancheck");
    j["group"] = group_json(rs);
    j["psi"] = ps.label;
    j["q"] = qs.label;
    j["dim_equality"] = dim_equality(rs, ps, qs).holds;
    Json cosets = Json::array();
    for (const auto& c : rep.cosets) {
        Json e;
        e["w"] = c.w;
        e["size"] = c.size;
        Json sw = Json::array();
        for (std::size_t k : c.s_w.members) sw.push_back(root_json(rs, k));
        e["s_w"] = sw;
        e["span_rank"] = c.span_rank;
        e["exceptional"] = c.in_exceptional_coset;
        e["stabilizer_torus_dim"] = c.stabilizer_torus_dim;
        cosets.push_back(e);
    }
    j["cosets"] = cosets;
    j["failures"] = rep.failures;
    j["passed"] = rep.passed();
    return {j, rep.passed()};
}

std::string render_text(const Json& report) {
    std::ostringstream os;
    flatten(report, "", os);
    return os.str();
}

} // namespace euphotic
