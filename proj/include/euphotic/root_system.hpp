#pragma once

#include "euphotic/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace euphotic {

/// A product of simple reflections s_{w[0]} s_{w[1]} ... s_{w[k-1]} (1-based
/// indices). Acting on a point, the last letter is applied first.
using Word = std::vector<int>;

enum class Family { A, B, C, D, E, F, G };

/// Finite reduced irreducible root system in simple-root coefficient coordinates.
///
/// Points are stored in value coordinates x_i = ⟨α_i, x⟩. Indices of simple
/// roots are 1-based throughout the public interface (index 0 is reserved for
/// the affine root α_0); vector positions are 0-based.
class RootSystem {
public:
    /// Builds the system from its Bourbaki Cartan matrix. G2 uses α_1 long.
    /// Throws InputError for an invalid (family, rank).
    static RootSystem build(Family family, int rank);
    /// Accepts "A"…"G" with an explicit rank, or tags such as "E6", "F4", "G2".
    static RootSystem build(const std::string& type_tag, int rank = 0);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    /// "A3", "E8", "G2", ...
    std::string name() const;
    bool is_classical() const;

    /// a_ij = ⟨α_j, α_i^∨⟩, 0-based positions.
    int cartan(int i, int j) const { return cartan_[i][j]; }
    const IntMatrix& cartan_matrix() const { return cartan_; }

    /// All roots, sorted lexicographically by coefficient vector.
    const std::vector<IntVec>& roots() const { return roots_; }
    std::size_t num_roots() const { return roots_.size(); }
    const IntVec& root(std::size_t idx) const { return roots_[idx]; }
    std::optional<std::size_t> index_of(const IntVec& coeffs) const;
    /// Index of the simple root α_i, 1-based i.
    std::size_t simple_index(int i) const;
    std::size_t negative_of(std::size_t idx) const { return neg_[idx]; }
    bool is_positive(std::size_t idx) const { return positive_[idx]; }
    std::vector<std::size_t> positive_roots() const;
    bool is_long(std::size_t idx) const { return long_[idx]; }
    int height(std::size_t idx) const;

    /// Highest root θ as a coefficient vector.
    const IntVec& highest_root() const { return theta_; }

    /// (α, β) for the W-invariant form normalised so short roots have length 2
    /// in simply laced types and the smallest squared length is 2 otherwise.
    int inner(const IntVec& a, const IntVec& b) const;
    /// ⟨α_k, γ^∨⟩ for each k: the coroot of γ in value coordinates.
    IntVec coroot_values(const IntVec& gamma) const;
    /// ⟨β, γ^∨⟩.
    int coroot_pairing(const IntVec& beta, const IntVec& gamma) const;

    /// ⟨α, x⟩ = Σ c_i x_i.
    Rat pairing(const IntVec& root, const RatVec& x) const;
    Rat pairing(std::size_t idx, const RatVec& x) const { return pairing(roots_[idx], x); }

    /// s_i(x) for 1-based simple index i; value coordinates v_j − a_ij v_i.
    RatVec reflect_point(int i, const RatVec& x) const;
    /// s_γ(x) = x − ⟨γ, x⟩ γ^∨.
    RatVec reflect_point_by(const IntVec& gamma, const RatVec& x) const;
    /// s_i(β) on coefficient vectors.
    IntVec reflect_root(int i, const IntVec& beta) const;
    /// Applies a word (product notation) to a point.
    RatVec apply(const Word& w, const RatVec& x) const;
    IntVec apply_to_root(const Word& w, const IntVec& beta) const;
    /// A word for the reflection s_γ.
    Word reflection_word(const IntVec& gamma) const;

    /// Unique dominant point y in W·x and a word w with y = w(x).
    std::pair<RatVec, Word> dominant_rep(const RatVec& x) const;
    bool is_dominant(const RatVec& x) const;

    /// Value-coordinate matrix of a word: y = M x.
    IntMatrix matrix_of(const Word& w) const;

    /// Order of the Weyl group, from the classical formulas.
    unsigned long long weyl_order() const;

    // Classical e-coordinates (types A–D only; InputError otherwise).
    /// Number of e-coordinates: rank+1 for A, rank for B/C/D.
    int classical_dim() const;
    RatVec to_classical(const RatVec& values) const;
    RatVec from_classical(const RatVec& e) const;
    /// The root as an integer vector in e-coordinates.
    IntVec classical_root(std::size_t idx) const;
    IntVec classical_root(const IntVec& coeffs) const;

private:
    Family family_{};
    int rank_ = 0;
    IntMatrix cartan_;
    std::vector<int> sym_;  // d_i = (α_i, α_i) / 2 scaled to integers
    std::vector<IntVec> roots_;
    std::map<IntVec, std::size_t> index_;
    std::vector<std::size_t> neg_;
    std::vector<char> positive_;
    std::vector<char> long_;
    IntVec theta_;
};

/// Closed subsystem with the reductive-group dimension convention.
struct RootSubset {
    std::vector<std::size_t> members;  // sorted root indices
    int dim = 0;                       // #members + ambient rank
};

/// Levi subsystem generated by a set of simple roots (1-based indices).
RootSubset levi_data(const RootSystem& rs, const std::vector<int>& simple_subset);
/// Levi subsystem of roots pairing to zero with a value-coordinate functional.
RootSubset levi_data(const RootSystem& rs, const RatVec& functional);

Family parse_family(const std::string& tag, int& rank);
std::string family_name(Family f);

} // namespace euphotic
