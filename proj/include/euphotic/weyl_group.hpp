#pragma once

#include "euphotic/root_system.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace euphotic {

/// Explicit enumeration of the finite Weyl group.
///
/// Each element carries its lexicographically least reduced word and its
/// value-coordinate matrix. Construction refuses groups above kCap elements.
class WeylGroup {
public:
    static constexpr unsigned long long kCap = 2'000'000ULL;

    /// Throws CapabilityError when |W| exceeds kCap.
    explicit WeylGroup(const RootSystem& rs);

    const RootSystem& root_system() const { return *rs_; }
    std::size_t size() const { return words_.size(); }
    std::size_t identity() const { return 0; }
    /// The longest element w_0.
    std::size_t longest() const { return words_.size() - 1; }

    const Word& word(std::size_t k) const { return words_[k]; }
    int length(std::size_t k) const { return static_cast<int>(words_[k].size()); }
    /// Entry (i, j) of the value-coordinate matrix of element k.
    int entry(std::size_t k, int i, int j) const { return mats_[k * r2_ + i * rank_ + j]; }
    RatVec act(std::size_t k, const RatVec& x) const;

    /// Element index of s_i·w_k and w_k·s_i (1-based i).
    std::size_t left_mul(int i, std::size_t k) const;
    std::size_t right_mul(std::size_t k, int i) const;

    /// Root permutations: perm[k][a] is the index of w_k(root a).
    const std::vector<std::vector<std::uint16_t>>& root_permutations() const { return perms_; }

private:
    std::size_t lookup(const std::vector<int>& mat) const;
    IntVec key_of(const int* mat) const;

    const RootSystem* rs_;
    int rank_;
    int r2_;
    std::vector<Word> words_;
    std::vector<int> mats_;
    std::vector<std::size_t> parent_;
    std::vector<int> first_letter_;
    std::map<IntVec, std::size_t> index_;
    std::vector<std::vector<std::uint16_t>> perms_;
};

} // namespace euphotic
