#pragma once

#include "euphotic/audit.hpp"
#include "euphotic/chargen.hpp"
#include "euphotic/grading.hpp"
#include "euphotic/hessenberg.hpp"
#include "euphotic/scenario.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace euphotic {

using Json = nlohmann::ordered_json;

/// Version of the report layout, emitted as "schema".
inline constexpr int kReportSchema = 1;

/// A structured report plus whether every requested check passed.
struct CommandResult {
    Json report;
    bool checks_passed = true;
};

/// Point in value coordinates, plus classical coordinates for types A–D.
Json point_json(const RootSystem& rs, const RatVec& y);
Json affine_root_json(const RootSystem& rs, const AffineRoot& a);

CommandResult cmd_facet(const RootSystem& rs, const std::vector<int>& J);
CommandResult cmd_grade(const RootSystem& rs, const std::vector<int>& J);

/// Enumerated Hessenberg data for a scenario. `bound` overrides the scenario
/// bound. Checks: survivors lie in the scenario region (when given) and every
/// expected point appears among the enumerated representatives.
CommandResult cmd_hessenberg(const Scenario& s, std::optional<Rat> bound = std::nullopt);

CommandResult cmd_audit(const Scenario& s);

/// Type and rank range for the dimension-equality census.
CommandResult cmd_classify(Family family, int min_rank, int max_rank);

/// Census when `exps` is empty; otherwise the genericity of one tuple.
CommandResult cmd_chargen(CharKind kind, int n, long long q, const std::vector<long long>& exps);

/// psi/q are parabolic labels; a bare integer d means "P_d" and "n" the rank.
CommandResult cmd_spancheck(const RootSystem& rs, const std::string& psi, const std::string& q);

/// Survivor of every gate: not certified empty by any weight-level test.
bool survives_gates(const HessenbergDatum& d);

/// Flat "key: value" rendering of a report.
std::string render_text(const Json& report);

} // namespace euphotic
