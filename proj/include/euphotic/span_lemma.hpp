#pragma once

#include "euphotic/root_system.hpp"

#include <vector>

namespace euphotic {

/// s_w = {α ∈ Φ⁺ \ Φ_ψ : w⁻¹α ∈ Φ⁻ \ Φ_Q}, with Φ_ψ and Φ_Q the Levi
/// subsystems of the given simple-root subsets (1-based).
RootSubset s_w_roots(const RootSystem& rs, const std::vector<int>& psi_subset, const std::vector<int>& q_subset,
                     const Word& w);

/// Φ ∩ span_ℚ(roots). Throws InvariantViolation if the result is not closed.
RootSubset rational_span_closure(const RootSystem& rs, const std::vector<std::size_t>& roots);

/// rank − span rank of Φ ∩ span_ℚ(roots): the dimension of ⋂_{α} ker α over
/// that subsystem.
int stabilizer_torus_dim(const RootSystem& rs, const std::vector<std::size_t>& roots);

struct DoubleCosetReport {
    Word w;                   // minimal-length, lexicographically least representative
    std::size_t size = 0;     // number of elements in W_ψ w W_Q
    RootSubset s_w;
    int span_rank = 0;
    bool in_exceptional_coset = false;  // w ∈ W_ψ w_0 W_Q
    int stabilizer_torus_dim = 0;
};

struct SpanLemmaReport {
    std::vector<DoubleCosetReport> cosets;  // ordered by (length, word)
    int failures = 0;  // non-exceptional cosets with full span rank
    bool passed() const { return failures == 0; }
};

/// Checks span_rank(s_w) < rank for every double coset W_ψ\W/W_Q other than
/// the one containing w_0. Throws CapabilityError when W is too large.
SpanLemmaReport verify_span_lemma(const RootSystem& rs, const std::vector<int>& psi_subset,
                                  const std::vector<int>& q_subset);

} // namespace euphotic
