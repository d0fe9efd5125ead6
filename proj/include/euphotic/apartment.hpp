#pragma once

#include "euphotic/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace euphotic {

/// Affine function x ↦ ⟨α, x⟩ + level, with α = rs.root(gradient).
struct AffineRoot {
    std::size_t gradient = 0;
    int level = 0;

    Rat value(const RootSystem& rs, const RatVec& x) const { return rs.pairing(gradient, x) + Rat(level); }
    AffineRoot negated(const RootSystem& rs) const { return {rs.negative_of(gradient), -level}; }
    friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
    friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
};

/// Marks n_0..n_r: n_0 = 1 and n_i is the coefficient of α_i in θ.
IntVec marks(const RootSystem& rs);

/// Value of the affine simple root α_i at x; α_0 = 1 − θ.
Rat affine_simple_value(const RootSystem& rs, int i, const RatVec& x);

/// Reflection in the wall of the affine simple root α_i (i = 0 allowed).
RatVec reflect_affine(const RootSystem& rs, int i, const RatVec& x);

/// A standard facet of the closed fundamental alcove.
struct Facet {
    std::vector<int> J;  // affine simple roots vanishing on the facet, sorted
    int m = 0;           // Σ of marks off J
    RatVec barycenter;   // value coordinates

    bool hyperspecial() const { return m == 1 && (J.empty() || J.front() != 0); }
};

/// Facet for the proper subset J ⊂ {0, …, rank}. Throws InputError otherwise.
Facet make_facet(const RootSystem& rs, std::vector<int> J);

/// True iff every affine simple root is ≥ 0 at x.
bool in_closed_alcove(const RootSystem& rs, const RatVec& x);

enum class Lattice { SimplyConnected, Adjoint };

/// "simply_connected" / "sc" or "adjoint" / "ad".
Lattice parse_lattice(const std::string& text);
std::string lattice_name(Lattice l);

/// Whether a value-coordinate vector is a translation in the cocharacter lattice:
/// the coroot lattice (simply connected) or the coweight lattice ℤ^rank (adjoint).
bool in_lattice(const RootSystem& rs, Lattice lattice, const RatVec& lambda);

/// y = w(x) + λ.
struct OrbitWitness {
    Word w;
    RatVec lambda;
};

struct OrbitPoint {
    RatVec y;
    OrbitWitness witness;
};

bool verify_witness(const RootSystem& rs, Lattice lattice, const RatVec& x, const RatVec& y,
                    const OrbitWitness& witness);

/// All dominant y ∈ W̃·x with ⟨θ, y⟩ ≤ bound, sorted lexicographically, each with a
/// witness. Throws CapabilityError when the translation box exceeds `max_box`.
std::vector<OrbitPoint> orbit_points(const RootSystem& rs, const RatVec& x, Lattice lattice, const Rat& bound,
                                     unsigned long long max_box = 200'000'000ULL);

/// Witness for y ∈ W̃·x, by brute force over W. The fractional-part multiset test
/// in classical coordinates is applied first where it is a valid invariant;
/// `use_pruning = false` disables it.
std::optional<OrbitWitness> orbit_contains(const RootSystem& rs, const RatVec& x, const RatVec& y, Lattice lattice,
                                           bool use_pruning = true);

/// Whether the fractional-part invariant is valid for this type and lattice.
bool fractional_pruning_applies(const RootSystem& rs, Lattice lattice);
/// The sorted invariant multiset (folded for B/C/D) of a point.
std::vector<Rat> fractional_invariant(const RootSystem& rs, const RatVec& x);

/// Representative of the W_P-orbit of y with α_j(y) ≥ 0 for all j ∈ J, obtained by
/// reflection descent, together with the updated witness.
std::pair<RatVec, OrbitWitness> facet_canonical(const RootSystem& rs, const std::vector<int>& J, const RatVec& y,
                                                OrbitWitness witness = {});

/// W̃·x_Q ∩ C̄ closed under W_P (the finite group generated by reflections in J_P).
std::vector<RatVec> exceptional_base_points(const RootSystem& rs, const RatVec& x_Q, const Facet& facet_P,
                                            Lattice lattice);

/// y is exceptional iff its W_P-canonical representative lies in the base points.
bool is_exceptional(const RootSystem& rs, const std::vector<RatVec>& base_points, const Facet& facet_P,
                    const RatVec& y);

} // namespace euphotic
