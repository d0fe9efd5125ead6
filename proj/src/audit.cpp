#include "euphotic/audit.hpp"

#include "euphotic/errors.hpp"
#include "euphotic/grading.hpp"

#include <algorithm>

namespace euphotic {

bool AuditReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

} // namespace

AuditReport audit(const Scenario& s) {
    const RootSystem rs = s.root_system();
    const Facet fp = make_facet(rs, s.J_P);
    const GradingReport g = grade(rs, fp);

    AuditReport rep;
    rep.scenario = s.name;
    rep.type = rs.name();
    rep.J_P = s.J_P;
    rep.J_Q = s.J_Q;
    rep.m = g.m;
    rep.dims = g.dims;

    RigidityInputs& in = rep.inputs;
    in.dim_L = g.dims[0];
    in.dim_LQ = levi_dim(rs, make_facet(rs, s.J_Q));
    in.provenance["dim_L"] = "computed";
    in.provenance["dim_LQ"] = "computed";

    if (s.psi_toral) {
        if (!fp.hyperspecial()) throw CapabilityError("toral psi is supported for a hyperspecial P only");
        const CentralizerReport c = centralizer(rs, *s.psi_toral);
        in.dim_Lpsi = c.dim_Gpsi;
        in.rk_Lpsi = rs.rank();
        in.provenance["dim_Lpsi"] = "computed";
        in.provenance["rk_Lpsi"] = "computed";
        rep.swan_direct = swan_direct(rs, *s.psi_toral);
    } else if (s.psi_table) {
        const PsiTable& t = *s.psi_table;
        std::vector<std::string> missing;
        if (!t.dim_Lpsi) missing.push_back("psi.table.dim_Lpsi");
        if (!t.rk_Lpsi) missing.push_back("psi.table.rk_Lpsi");
        if (!missing.empty()) {
            std::string msg = s.name + ": missing table fields:";
            for (const auto& f : missing) msg += " " + f;
            throw InputError(msg);
        }
        in.dim_Lpsi = t.dim_Lpsi->value;
        in.rk_Lpsi = t.rk_Lpsi->value;
        in.provenance["dim_Lpsi"] = t.dim_Lpsi->cite;
        in.provenance["rk_Lpsi"] = t.rk_Lpsi->cite;
        if (t.dim_ginv_pi1) {
            in.dim_ginv_pi1 = t.dim_ginv_pi1->value;
            in.provenance["dim_ginv_pi1"] = t.dim_ginv_pi1->cite;
        }
    } else {
        throw InputError(s.name + ": missing table fields: psi.table.dim_Lpsi psi.table.rk_Lpsi");
    }
    if (!in.provenance.count("dim_ginv_pi1")) in.provenance["dim_ginv_pi1"] = "default";

    rep.swan = swan_prediction(in.dim_L, in.dim_Lpsi);
    if (rep.swan_direct && *rep.swan_direct != rep.swan)
        throw ConsistencyError(s.name + ": Swan #R' = " + std::to_string(*rep.swan_direct) +
                               " differs from dim L - dim L_psi = " + std::to_string(rep.swan));
    if (rep.swan_direct) rep.checks.push_back({"swan_forms_agree", true, std::to_string(rep.swan)});

    rep.open_orbit = open_orbit_check(in);
    rep.rigidity_sum = rigidity_sum(in);
    rep.dim_L_over_Q = (in.dim_L - in.dim_LQ) / 2;
    rep.dim_B_psi = (in.dim_Lpsi + in.rk_Lpsi) / 2;
    rep.checks.push_back({"open_orbit", rep.open_orbit,
                          "dim L/Q = " + std::to_string(rep.dim_L_over_Q) + ", dim B_psi = " + std::to_string(rep.dim_B_psi)});
    rep.checks.push_back({"rigidity_sum_zero", rep.rigidity_sum == 0, "sum = " + std::to_string(rep.rigidity_sum)});

    if (s.psi_table) {
        const PsiTable& t = *s.psi_table;
        if (t.dim_B_psi)
            rep.checks.push_back({"dim_B_psi_matches_table", t.dim_B_psi->value == rep.dim_B_psi,
                                  "table " + std::to_string(t.dim_B_psi->value) + " (" + t.dim_B_psi->cite + ")"});
        if (t.dim_L_over_Q)
            rep.checks.push_back({"dim_L_over_Q_matches_table", t.dim_L_over_Q->value == rep.dim_L_over_Q,
                                  "table " + std::to_string(t.dim_L_over_Q->value) + " (" + t.dim_L_over_Q->cite + ")"});
    }
    if (s.expected_dims)
        rep.checks.push_back({"grading_dims", s.expected_dims->value == g.dims,
                              "expected (" + join(s.expected_dims->value) + ") (" + s.expected_dims->cite + ")"});
    if (s.J_Q.empty() || s.J_Q.front() != 0) {
        const bool ok = springer_identity(rs, s.J_Q) && levi_data(rs, s.J_Q).dim == in.dim_LQ;
        rep.checks.push_back({"springer_identity", ok, "rank + 2 #Phi+_Q = dim L_Q"});
    }

    rep.annotations.push_back("predicted slope at infinity: 1/" + std::to_string(g.m));
    rep.annotations.push_back("predicted dim g^(I_inf) = rk L_psi = " + std::to_string(in.rk_Lpsi));
    rep.annotations.insert(rep.annotations.end(), s.annotations.begin(), s.annotations.end());
    return rep;
}

} // namespace euphotic
