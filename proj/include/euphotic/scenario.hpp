#pragma once

#include "euphotic/apartment.hpp"
#include "euphotic/chargen.hpp"
#include "euphotic/hessenberg.hpp"
#include "euphotic/toral_psi.hpp"

#include <optional>
#include <string>
#include <vector>

namespace euphotic {

/// A number read from a scenario together with the citation it came from.
template <class T>
struct Cited {
    T value{};
    std::string cite;
};

/// Dimensions of a non-toral ψ, each sourced from a cited table entry.
struct PsiTable {
    std::optional<Cited<int>> dim_Lpsi;
    std::optional<Cited<int>> rk_Lpsi;
    std::optional<Cited<int>> dim_B_psi;
    std::optional<Cited<int>> dim_L_over_Q;
    std::optional<Cited<int>> dim_ginv_pi1;
};

/// Points expected in the orbit W̃·x_Q, stored in value coordinates.
struct PointSet {
    std::vector<RatVec> points;
    std::string cite;
};

/// A candidate datum (P, ψ, χ, Q) plus enumeration settings.
struct Scenario {
    std::string name;
    std::string cite;
    std::string origin;  // file path or caller-supplied tag

    std::string type;  // "G2", "C3", ...
    Lattice lattice = Lattice::SimplyConnected;
    std::vector<int> J_P;

    /// Affine simple roots of the facet of Q; J_Q ⊆ J_P.
    std::vector<int> J_Q;
    std::string q_label;
    /// Explicit x_Q in value coordinates. Defaults to the barycenter of J_Q.
    std::optional<Cited<RatVec>> x_Q;

    std::string psi_label;
    std::optional<BlockFunctional> psi_toral;
    std::optional<PsiTable> psi_table;

    /// Unset means a symbolic generic character.
    std::optional<CharacterTuple> chi;

    std::optional<std::vector<GradientRule>> rules;
    Region region;
    Rat bound = Rat(3);
    std::vector<RootBound> predicates;

    std::vector<PointSet> expected_points;
    std::optional<Cited<std::vector<int>>> expected_dims;
    std::vector<std::string> annotations;

    RootSystem root_system() const;
    RatVec x_Q_values(const RootSystem& rs) const;
};

/// Parses a scenario document. Every tabulated or listed number must carry a
/// "cite"; missing or malformed fields raise InputError listing each problem.
Scenario parse_scenario(const std::string& json_text, const std::string& origin = "<memory>");

/// Reads and parses a scenario file.
Scenario load_scenario(const std::string& path);

} // namespace euphotic
