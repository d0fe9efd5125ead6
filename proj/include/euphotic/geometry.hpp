#pragma once

#include "euphotic/rational.hpp"

#include <optional>
#include <vector>

namespace euphotic {

/// Finds ξ with ⟨v, ξ⟩ > 0 for every v in `vectors`, or nullopt if none exists.
///
/// Fourier–Motzkin elimination over exact integers with Chernikov pruning.
/// The empty set is feasible: the witness is the first unit vector of length
/// `dim` (or 1 when `dim` is 0). Throws InputError on dimension mismatch.
std::optional<RatVec> strict_cone_feasible(const std::vector<RatVec>& vectors, std::size_t dim = 0);

/// True iff 0 lies in the convex hull of `vectors`; the empty set gives false.
///
/// Implemented as an exact phase-one simplex (Bland's rule), independently of
/// strict_cone_feasible, so the two can cross-check each other.
bool hull_contains_origin(const std::vector<RatVec>& vectors);

/// Convex weights λ ≥ 0, Σλ = 1, Σ λ_i v_i = 0 when they exist.
std::optional<RatVec> hull_certificate(const std::vector<RatVec>& vectors);

/// Rank of the rational span, by exact Gaussian elimination.
int span_rank(const std::vector<RatVec>& vectors);
int span_rank(const std::vector<IntVec>& vectors);

/// Solves the square system M x = b exactly; nullopt if M is singular.
std::optional<RatVec> solve(const std::vector<RatVec>& m, const RatVec& b);

} // namespace euphotic
