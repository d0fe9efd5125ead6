#pragma once

#include "euphotic/apartment.hpp"
#include "euphotic/grading.hpp"

#include <optional>
#include <string>
#include <vector>

namespace euphotic {

/// A set of root gradients (coefficient vectors). A reducibility rule fires when
/// none of its gradients is a weight of V_w^⊥.
using GradientRule = std::vector<IntVec>;

/// Linear constraint on ⟨root, y⟩ with optional lower/upper bounds.
struct RootBound {
    IntVec root;
    std::optional<Rat> lower;
    bool lower_strict = false;
    std::optional<Rat> upper;
    bool upper_strict = false;

    bool holds(const RootSystem& rs, const RatVec& y) const;
    std::string describe() const;
};

/// A union of strips: y lies in the region iff some strip holds.
using Region = std::vector<RootBound>;
bool in_region(const RootSystem& rs, const Region& region, const RatVec& y);

/// Weight data of one orbit point y = w x_Q relative to the facet of P.
struct HessenbergDatum {
    RatVec y;
    OrbitWitness witness;
    std::vector<AffineRoot> qw_roots;
    std::vector<AffineRoot> vw_perp;
    std::vector<std::size_t> vw_perp_gradients;  // sorted root indices
    /// Hyperspecial P only: the Cartan (zero weight) lies in V_w^⊥.
    bool zero_weight = false;

    bool exceptional = false;
    bool halfspace_empty = false;
    std::optional<RatVec> halfspace_witness;
    std::optional<bool> simple_root_meager;
    std::optional<bool> rule_empty;
};

/// Ψ(Q_w): Levi affine roots with value ≤ 0 at y.
std::vector<AffineRoot> qw_roots(const RootSystem& rs, const GradingReport& g, const RatVec& y);

/// V_w^⊥: affine roots with value −1/m at x_P and value < 0 at y. The result is
/// cross-checked against the gradient inequality ⟨α, y − x_P⟩ < 1/m; a mismatch
/// throws InvariantViolation.
std::vector<AffineRoot> vw_perp(const RootSystem& rs, const GradingReport& g, const RatVec& y);

/// True iff all gradients lie in an open half-space (certifies Y_w = ∅).
bool halfspace_empty(const RootSystem& rs, const HessenbergDatum& d);

/// Some simple root pairs to ≥ 1 with the dominant point y. Throws
/// CapabilityError for a facet other than the origin.
bool simple_root_meager(const RootSystem& rs, const Facet& facet, const RatVec& y);

/// Some rule has none of its gradients among the datum's V_w^⊥ gradients.
bool rule_empty(const RootSystem& rs, const HessenbergDatum& d, const std::vector<GradientRule>& rules);

/// Builds a datum with every gate evaluated. `base_points` (from
/// exceptional_base_points) may be null, in which case `exceptional` stays false.
HessenbergDatum make_datum(const RootSystem& rs, const GradingReport& g, const RatVec& y, OrbitWitness witness,
                           const std::vector<GradientRule>* rules, const std::vector<RatVec>* base_points);

struct EnumerationOptions {
    Lattice lattice = Lattice::SimplyConnected;
    Rat bound = Rat(3);
    std::vector<RootBound> predicates;  // all must hold (applied last)
    std::optional<std::vector<GradientRule>> rules;
    bool compute_exceptional = true;
};

struct EnumerationResult {
    std::vector<HessenbergDatum> data;
    std::size_t dominant_points = 0;  // orbit_points output size
    std::size_t cosets = 0;           // distinct W_P-canonical points before predicates
    std::size_t filtered = 0;         // removed by predicates
    std::vector<RatVec> base_points;
};

/// Orbit points of x_Q, one per W_P-orbit (reported as the P-dominant
/// representative), with all gate flags. Throws CapabilityError when an
/// enumeration cap is exceeded.
EnumerationResult enumerate_candidates(const RootSystem& rs, const Facet& facet_P, const RatVec& x_Q,
                                       const EnumerationOptions& opts);

} // namespace euphotic
