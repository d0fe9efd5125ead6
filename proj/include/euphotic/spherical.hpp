#pragma once

#include "euphotic/root_system.hpp"

#include <string>
#include <vector>

namespace euphotic {

/// A parabolic class given by a partition (type A) or an isotropic-flag label
/// (types B/C/D), with its Levi as a set of simple roots.
struct ParabolicSpec {
    std::string label;     // canonical form: "(4,2)", "P_3", "P_{1,2}", "P_4+", "P_{2,4-}"
    std::vector<int> levi; // simple roots of the Levi, 1-based, sorted
    int dim = 0;           // dim of the Levi
};

/// Parses "(4,2)", "4,2", "(1^3)" for type A and "P_d", "P_{d,d'}" for B/C/D.
/// In type D the two classes of P_n are "P_n+" (Levi omits α_n, the default
/// for a bare "P_n") and "P_n-" (Levi omits α_{n−1}); "P_{n-1}" omits both.
/// Throws InputError for an invalid label.
ParabolicSpec parse_spec(const RootSystem& rs, const std::string& text);
/// The canonical spec of a Levi given by its simple roots.
ParabolicSpec spec_from_levi(const RootSystem& rs, std::vector<int> levi);

struct DimEquality {
    bool holds = false;
    int dim_Gpsi = 0;
    int dim_LQ = 0;
    int num_roots = 0;
};

/// dim G_ψ + dim L_Q = #Φ, with dim G_ψ cross-checked against the centralizer
/// of a generic toral ψ with that Levi.
DimEquality dim_equality(const RootSystem& rs, const ParabolicSpec& psi, const ParabolicSpec& q);

struct SphericalPair {
    Family family{};
    int rank = 0;
    ParabolicSpec psi;
    ParabolicSpec q;
    DimEquality dims;
    bool in_paper_list = false;
    std::string paper_case;  // citation of the listed case, empty for dim-eq-only pairs
};

struct PaperList {
    std::vector<SphericalPair> pairs;
    std::string note;  // set when the (type, rank) is not covered
};

/// Version of the embedded spherical-pair table.
int spherical_data_version();

/// The listed pairs for one (type, rank), families instantiated at that rank.
PaperList paper_list(Family family, int rank);

/// Every (ψ, Q) pair over partitions or flag labels of length ≤ 2 satisfying
/// the dimension equality, for ranks up to max_rank (≤ 8), flagged against the
/// listed pairs. Deterministic order: rank, then ψ label, then Q label.
std::vector<SphericalPair> enumerate_dim_eq(Family family, int max_rank);

/// The candidate labels enumerate_dim_eq ranges over for one group.
std::vector<ParabolicSpec> candidate_specs(const RootSystem& rs);

/// Smallest rank at which the classification lists apply to the family.
int min_listed_rank(Family family);

} // namespace euphotic
