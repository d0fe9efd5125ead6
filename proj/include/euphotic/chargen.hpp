#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace euphotic {

/// A character of T(F_q) ≅ (F_q^×)^n as exponents modulo q − 1 with respect
/// to a fixed generator.
struct CharacterTuple {
    long long q = 0;
    std::vector<long long> exps;  // reduced to [0, q − 2]
};

/// Reduces the exponents; throws InputError unless q is a prime power ≥ 2.
CharacterTuple make_character(long long q, std::vector<long long> exps);

bool is_prime_power(long long q);

enum class CharKind { A, BCD };
CharKind parse_char_kind(const std::string& text);

struct GenericityResult {
    bool generic = false;
    /// Type A: violating subsets I (1-based). Type B/C/D: violating pairs,
    /// stored as I followed by J in `violations_j`.
    std::vector<std::vector<int>> violations;
    std::vector<std::vector<int>> violations_j;
};

/// For every ∅ ≠ I ⊊ {1..n} with a = |I|, b = n − a, g = gcd(a, b):
/// (b/g)·Σ_I c ≢ (a/g)·Σ_J c mod (q − 1), J the complement.
/// `first_only` stops at the first violation.
GenericityResult is_generic_A(const CharacterTuple& chi, bool first_only = false);

/// For every disjoint I, J ⊆ {1..n} with I ∪ J ≠ ∅: Σ_I c ≢ Σ_J c mod (q − 1).
GenericityResult is_generic_BCD(const CharacterTuple& chi, bool first_only = false);

/// Number of generic tuples among all (q − 1)^n. Type B/C/D uses a signed
/// subset-sum reachability test per tuple; type A evaluates the subset
/// conditions. Throws CapabilityError above 10^7 tuples or n > 12.
std::uint64_t count_generic(CharKind kind, int n, long long q);

} // namespace euphotic
