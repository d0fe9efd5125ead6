#include "euphotic/commands.hpp"
#include "euphotic/errors.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace euphotic;

namespace {

const std::string kDir = EUPHOTIC_SCENARIO_DIR;

std::string read(const std::string& rel) {
    std::ifstream in(kDir + "/" + rel);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> all_scenarios() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::recursive_directory_iterator(kDir))
        if (e.path().extension() == ".json") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

Json g2_doc() { return Json::parse(read("g2.json")); }

std::string error_of(const Json& doc) {
    try {
        parse_scenario(doc.dump());
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(Scenario, LoadsEveryShippedFile) {
    auto files = all_scenarios();
    EXPECT_GE(files.size(), 25u);
    for (const auto& f : files) EXPECT_NO_THROW(load_scenario(f)) << f;
}

TEST(Scenario, CitationsAreEnforced) {
    Json doc = g2_doc();
    doc.erase("cite");
    EXPECT_NE(error_of(doc).find("missing 'cite'"), std::string::npos);

    doc = g2_doc();
    doc["psi"]["table"]["dim_Lpsi"].erase("cite");
    EXPECT_NE(error_of(doc).find("psi.table.dim_Lpsi"), std::string::npos);

    doc = g2_doc();
    doc["x_Q"] = {{"values", {"0", "1/2"}}};
    EXPECT_NE(error_of(doc).find("x_Q: missing 'cite'"), std::string::npos);
}

TEST(Scenario, StructuralErrorsAreItemized) {
    Json doc = g2_doc();
    doc["facet_Q"]["J"] = {1};
    doc["colour"] = "red";
    const std::string err = error_of(doc);
    EXPECT_NE(err.find("J_Q must be contained in J_P"), std::string::npos);
    EXPECT_NE(err.find("unknown field 'colour'"), std::string::npos);

    doc = g2_doc();
    doc["facet_P"]["J"] = {0, 1, 2};
    EXPECT_NE(error_of(doc).find("facet_P"), std::string::npos);

    doc = g2_doc();
    doc["rules"] = {{{1, 1, 1}}};
    EXPECT_NE(error_of(doc).find("rules[0]"), std::string::npos);
    EXPECT_THROW(parse_scenario("{"), InputError);
}

TEST(Scenario, AuditListsMissingTableFields) {
    Json doc = g2_doc();
    doc["psi"]["table"].erase("dim_Lpsi");
    doc["psi"]["table"].erase("rk_Lpsi");
    const Scenario s = parse_scenario(doc.dump());
    try {
        audit(s);
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("psi.table.dim_Lpsi"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("psi.table.rk_Lpsi"), std::string::npos);
    }
}

TEST(Scenario, G2Audit) {
    const AuditReport a = audit(load_scenario(kDir + "/g2.json"));
    EXPECT_EQ(a.inputs.dim_L, 6);
    EXPECT_EQ(a.inputs.dim_LQ, 4);
    EXPECT_EQ(a.dims, (std::vector<int>{6, 8}));
    EXPECT_EQ(a.swan, 5);
    EXPECT_TRUE(a.open_orbit);
    EXPECT_EQ(a.rigidity_sum, 0);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(a.inputs.provenance.at("dim_L"), "computed");
    EXPECT_NE(a.inputs.provenance.at("rk_Lpsi").find("T_psi"), std::string::npos);
}

TEST(Scenario, ExceptionalOpenOrbitExamples) {
    const AuditReport e8 = audit(load_scenario(kDir + "/exceptional/e8_m5.json"));
    EXPECT_EQ(e8.dim_L_over_Q, 4);
    EXPECT_EQ(e8.dim_B_psi, 4);
    EXPECT_TRUE(e8.open_orbit);
    const AuditReport f4 = audit(load_scenario(kDir + "/exceptional/f4_m3_q1.json"));
    EXPECT_EQ(f4.dim_L_over_Q, 2);
    EXPECT_EQ(f4.dim_B_psi, 2);
    const AuditReport e7 = audit(load_scenario(kDir + "/exceptional/e7_m2_q1.json"));
    EXPECT_EQ(e7.dim_B_psi, 21);
    EXPECT_EQ(e7.inputs.dim_LQ, 27);
}

TEST(Scenario, EveryShippedAuditPasses) {
    int audited = 0;
    for (const auto& f : all_scenarios()) {
        const Scenario s = load_scenario(f);
        if (!s.psi_toral && !s.psi_table) continue;
        const CommandResult r = cmd_audit(s);
        EXPECT_TRUE(r.checks_passed) << f << "\n" << r.report.dump(1);
        EXPECT_EQ(r.report["rigidity_sum"], 0) << f;
        ++audited;
    }
    EXPECT_GE(audited, 25);
}

TEST(Scenario, ToralSwanFormsAgree) {
    const AuditReport a = audit(load_scenario(kDir + "/orbits/b3_case5.json"));
    ASSERT_TRUE(a.swan_direct.has_value());
    EXPECT_EQ(*a.swan_direct, a.swan);
}

TEST(Scenario, G2HessenbergSurvivorsInRegion) {
    const Scenario s = load_scenario(kDir + "/g2.json");
    const CommandResult r = cmd_hessenberg(s);
    EXPECT_TRUE(r.checks_passed) << r.report["checks"].dump(1);
    EXPECT_GT(r.report["data"].size(), 0u);
    const CommandResult empty = cmd_hessenberg(s, Rat(0));
    EXPECT_TRUE(empty.checks_passed);
    EXPECT_EQ(empty.report["data"].size(), 0u);
}

TEST(Scenario, C3ListedPointOutsideOrbit) {
    // (2, 1/3, 0) has fractional parts {0, 1/3, 0}, not those of (1/3, 1/3, 0).
    const CommandResult r = cmd_hessenberg(load_scenario(kDir + "/orbits/c3_case2.json"));
    EXPECT_FALSE(r.checks_passed);
    const std::string detail = r.report["checks"][0]["detail"];
    EXPECT_NE(detail.find("5/6 enumerated"), std::string::npos) << detail;
    EXPECT_NE(detail.find("missing (2, 1/3, 0)"), std::string::npos) << detail;
}

TEST(Scenario, D5ListedPointsOutsideOrbit) {
    // Each listed point has three coordinates in ±1/4 + Z; x_Q = (1/4, 1/4, 0, 0, 0) has two.
    const CommandResult r = cmd_hessenberg(load_scenario(kDir + "/orbits/d5_case3.json"));
    EXPECT_FALSE(r.checks_passed);
    const std::string detail = r.report["checks"][0]["detail"];
    EXPECT_NE(detail.find("0/3 enumerated"), std::string::npos) << detail;
}

TEST(Scenario, ReportsAreDeterministic) {
    const Scenario s = load_scenario(kDir + "/g2.json");
    EXPECT_EQ(cmd_hessenberg(s).report.dump(), cmd_hessenberg(s).report.dump());
    EXPECT_EQ(cmd_audit(s).report.dump(), cmd_audit(s).report.dump());
    EXPECT_EQ(cmd_audit(s).report["schema"], 1);
}
