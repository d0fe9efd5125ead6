#pragma once

#include "euphotic/rigidity.hpp"
#include "euphotic/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace euphotic {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Consolidated rigidity numerology for one scenario.
struct AuditReport {
    std::string scenario;
    std::string type;
    std::vector<int> J_P;
    std::vector<int> J_Q;
    int m = 0;
    std::vector<int> dims;
    RigidityInputs inputs;
    int dim_L_over_Q = 0;
    int dim_B_psi = 0;
    int swan = 0;                      // dim L − dim L_ψ
    std::optional<int> swan_direct;    // #R′, toral ψ only
    bool open_orbit = false;
    int rigidity_sum = 0;
    std::vector<Check> checks;
    std::vector<std::string> annotations;

    bool passed() const;
};

/// Drives the rigidity checks over a scenario. Toral ψ requires a hyperspecial
/// P and is computed; otherwise ψ comes from the cited table. Missing table
/// fields raise InputError listing them; disagreeing Swan forms raise
/// ConsistencyError.
AuditReport audit(const Scenario& s);

} // namespace euphotic
