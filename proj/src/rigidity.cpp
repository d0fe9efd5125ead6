#include "euphotic/rigidity.hpp"

#include "euphotic/errors.hpp"

namespace euphotic {

void validate(const RigidityInputs& in) {
    if (in.dim_L < 0 || in.dim_LQ < 0 || in.dim_Lpsi < 0 || in.rk_Lpsi < 0 || in.dim_ginv_pi1 < 0)
        throw InputError("rigidity inputs must be non-negative");
    if (in.dim_LQ > in.dim_L) throw InputError("dim L_Q exceeds dim L");
    if (in.rk_Lpsi > in.dim_Lpsi) throw InputError("rk L_psi exceeds dim L_psi");
}

bool open_orbit_check(const RigidityInputs& in) {
    validate(in);
    if ((in.dim_L - in.dim_LQ) % 2 != 0) throw InputError("dim L - dim L_Q is odd");
    if ((in.rk_Lpsi + in.dim_Lpsi) % 2 != 0) throw InputError("rk L_psi + dim L_psi is odd");
    return (in.dim_L - in.dim_LQ) / 2 == (in.rk_Lpsi + in.dim_Lpsi) / 2;
}

int rigidity_sum(const RigidityInputs& in) {
    return (in.dim_L - in.dim_Lpsi) - in.dim_LQ - in.rk_Lpsi + in.dim_ginv_pi1;
}

bool springer_identity(const RootSystem& rs, const std::vector<int>& subset) {
    const RootSubset levi = levi_data(rs, subset);
    int positive = 0;
    for (std::size_t k : levi.members)
        if (rs.is_positive(k)) ++positive;
    return rs.rank() + 2 * positive == levi.dim;
}

} // namespace euphotic
