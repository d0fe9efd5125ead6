#pragma once

#include "euphotic/apartment.hpp"

#include <vector>

namespace euphotic {

/// The ℤ/m-grading g = ⊕ g(i) attached to a facet.
///
/// For m = 1 the degree-one piece is all of g, so V_P also carries the Cartan
/// (the imaginary affine roots (0, ±1)); `vp_has_cartan` records this and the
/// identity d_1 = |vp_weights| is asserted only for m ≥ 2.
struct GradingReport {
    Facet facet;
    int m = 0;
    std::vector<int> dims;                    // d_0, …, d_{m−1}
    std::vector<AffineRoot> levi_roots;       // value 0 at x_P
    std::vector<AffineRoot> vp_weights;       // value 1/m at x_P
    std::vector<AffineRoot> vp_dual_weights;  // value −1/m at x_P
    bool vp_has_cartan = false;
};

/// Throws InvariantViolation when the residues ⟨α, x_P⟩ mod 1 are not exactly
/// {0, 1/m, …, (m−1)/m} or any internal identity fails.
GradingReport grade(const RootSystem& rs, const Facet& facet);

/// d_0 = dim L_P.
int levi_dim(const RootSystem& rs, const Facet& facet);

} // namespace euphotic
