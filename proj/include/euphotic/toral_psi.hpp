#pragma once

#include "euphotic/root_system.hpp"

#include <map>
#include <string>
#include <vector>

namespace euphotic {

/// One block of equal eigenvalues: a symbolic label and the 1-based classical
/// coordinates carrying it. Labels are "0" or an optional sign followed by a
/// symbol name ("+a", "-a", "−a", "a").
struct PsiBlock {
    std::string label;
    std::vector<int> coords;
};

/// A generic element ψ ∈ Lie T given by the block structure of its eigenvalues.
///
/// Type A: every block carries its own symbol (sum-zero convention). Types
/// B/C/D: each symbol s may appear as +s and −s, plus an optional 0-block.
/// Symbols are generically independent, so a root vanishes on ψ only when the
/// block structure forces it.
struct BlockFunctional {
    Family family{};
    int rank = 0;
    std::vector<PsiBlock> blocks;
};

/// Throws InputError unless the blocks partition the classical coordinates
/// and the labels are valid for the type.
void validate(const BlockFunctional& psi);

/// ⟨α, ψ⟩ as a linear form in the symbols (zero coefficients dropped).
std::map<std::string, int> symbolic_value(const RootSystem& rs, const BlockFunctional& psi, std::size_t root);

struct CentralizerReport {
    RootSubset phi_psi;
    int dim_Gpsi = 0;
    int swan_numerator = 0;  // #R′ = #{α : α(ψ) ≠ 0}
};

/// Roots vanishing structurally on ψ and the derived dimensions.
CentralizerReport centralizer(const RootSystem& rs, const BlockFunctional& psi);

/// #R′ for hyperspecial ψ (m = 1).
int swan_direct(const RootSystem& rs, const BlockFunctional& psi);
/// dim L − dim L_ψ.
int swan_prediction(int dim_L, int dim_Lpsi);
/// #R′ / m; throws ConsistencyError when m does not divide #R′.
int swan_graded(int m, int r_prime);

/// Classical coordinates of ψ for a numeric choice of the symbols. Type A is
/// shifted to sum zero (requires every symbol to be assigned).
RatVec instantiate(const BlockFunctional& psi, const std::map<std::string, Rat>& values);

/// The generic ψ whose centralizer is the Levi of the given simple-root subset
/// (1-based). Types A–D only.
BlockFunctional psi_for_levi(const RootSystem& rs, const std::vector<int>& levi_subset);

} // namespace euphotic
