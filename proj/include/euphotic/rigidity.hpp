#pragma once

#include "euphotic/root_system.hpp"

#include <map>
#include <string>
#include <vector>

namespace euphotic {

/// Integers entering the rigidity count. `provenance` maps a field name to
/// "computed" or to the citation of the table it was read from.
struct RigidityInputs {
    int dim_L = 0;
    int dim_LQ = 0;
    int dim_Lpsi = 0;
    int rk_Lpsi = 0;  // dim T_ψ
    int dim_ginv_pi1 = 0;
    std::map<std::string, std::string> provenance;
};

/// Throws InputError unless 0 ≤ dim_LQ ≤ dim_L and 0 ≤ rk_Lpsi ≤ dim_Lpsi.
void validate(const RigidityInputs& in);

/// dim L/Q = dim B_ψ, i.e. (dim_L − dim_LQ)/2 = (rk_Lpsi + dim_Lpsi)/2.
/// Throws InputError when either numerator is odd.
bool open_orbit_check(const RigidityInputs& in);

/// (dim_L − dim_Lpsi) − dim_LQ − rk_Lpsi + dim_ginv_pi1: the Swan term, the
/// two inertia invariants and the global invariants.
int rigidity_sum(const RigidityInputs& in);

/// rank + 2·#Φ⁺_S = dim L_S for a set S of simple roots (1-based).
bool springer_identity(const RootSystem& rs, const std::vector<int>& subset);

} // namespace euphotic
