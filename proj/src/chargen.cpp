#include "euphotic/chargen.hpp"

#include "euphotic/errors.hpp"
#include "euphotic/threads.hpp"

#include <atomic>
#include <bit>
#include <numeric>

namespace euphotic {

namespace {

constexpr int kMaxN = 12;
constexpr std::uint64_t kBudget = 10'000'000ULL;

long long mod(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

std::vector<int> members(unsigned mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) out.push_back(i + 1);
    return out;
}

// 0 ∉ {Σ ε_i c_i : ε ∈ {−1, 0, 1}^n, ε ≠ 0} modulo M.
bool bcd_generic_by_reachability(const std::vector<long long>& c, long long M) {
    std::vector<char> nonzero(M, 0), next(M);
    for (long long ci : c) {
        next = nonzero;
        const long long a = mod(ci, M), b = mod(-ci, M);
        next[a] = next[b] = 1;
        for (long long s = 0; s < M; ++s) {
            if (!nonzero[s]) continue;
            next[(s + a) % M] = 1;
            next[(s + b) % M] = 1;
        }
        nonzero.swap(next);
    }
    return !nonzero[0];
}

} // namespace

bool is_prime_power(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;
}

CharacterTuple make_character(long long q, std::vector<long long> exps) {
    if (!is_prime_power(q)) throw InputError("q = " + std::to_string(q) + " is not a prime power");
    if (exps.empty() || static_cast<int>(exps.size()) > kMaxN)
        throw InputError("character needs between 1 and " + std::to_string(kMaxN) + " exponents");
    for (auto& e : exps) e = mod(e, q - 1);
    return {q, std::move(exps)};
}

CharKind parse_char_kind(const std::string& text) {
    if (text == "A") return CharKind::A;
    if (text == "BCD" || text == "B" || text == "C" || text == "D") return CharKind::BCD;
    throw InputError("character kind must be A or BCD, got '" + text + "'");
}

GenericityResult is_generic_A(const CharacterTuple& chi, bool first_only) {
    const int n = static_cast<int>(chi.exps.size());
    if (n < 2) throw InputError("type A genericity needs n >= 2");
    const long long M = chi.q - 1;
    long long total = 0;
    for (auto c : chi.exps) total += c;
    GenericityResult r;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        long long si = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) si += chi.exps[i];
        const long long sj = total - si;
        const int a = std::popcount(mask), b = n - a, g = std::gcd(a, b);
        if (mod((b / g) * si - (a / g) * sj, M) == 0) {
            r.violations.push_back(members(mask, n));
            if (first_only) break;
        }
    }
    r.generic = r.violations.empty();
    return r;
}

GenericityResult is_generic_BCD(const CharacterTuple& chi, bool first_only) {
    const int n = static_cast<int>(chi.exps.size());
    const long long M = chi.q - 1;
    GenericityResult r;
    // Base-3 digits: 0 unused, 1 in I, 2 in J.
    long long states = 1;
    for (int i = 0; i < n; ++i) states *= 3;
    for (long long code = 1; code < states; ++code) {
        long long s = 0, c = code;
        unsigned im = 0, jm = 0;
        for (int i = 0; i < n; ++i, c /= 3) {
            if (c % 3 == 1) {
                s += chi.exps[i];
                im |= 1u << i;
            } else if (c % 3 == 2) {
                s -= chi.exps[i];
                jm |= 1u << i;
            }
        }
        if (mod(s, M) == 0) {
            r.violations.push_back(members(im, n));
            r.violations_j.push_back(members(jm, n));
            if (first_only) break;
        }
    }
    r.generic = r.violations.empty();
    return r;
}

std::uint64_t count_generic(CharKind kind, int n, long long q) {
    if (n < 1 || n > kMaxN) throw CapabilityError("count_generic: n must be between 1 and " + std::to_string(kMaxN));
    if (kind == CharKind::A && n < 2) throw InputError("type A genericity needs n >= 2");
    if (!is_prime_power(q)) throw InputError("q = " + std::to_string(q) + " is not a prime power");
    const long long M = q - 1;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(M);
        if (total > kBudget) throw CapabilityError("count_generic: (q-1)^n exceeds the 10^7 tuple budget");
    }
    // Split by the first exponent for parallelism.
    std::atomic<std::uint64_t> count{0};
    parallel_for(static_cast<std::size_t>(M), [&](std::size_t first) {
        std::uint64_t local = 0;
        std::vector<long long> c(n, 0);
        c[0] = static_cast<long long>(first);
        const std::uint64_t inner = total / static_cast<std::uint64_t>(M);
        for (std::uint64_t t = 0; t < inner; ++t) {
            std::uint64_t v = t;
            for (int i = 1; i < n; ++i) {
                c[i] = static_cast<long long>(v % M);
                v /= M;
            }
            bool ok = kind == CharKind::BCD ? bcd_generic_by_reachability(c, M)
                                            : is_generic_A({q, c}, true).generic;
            local += ok;
        }
        count += local;
    });
    return count.load();
}

} // namespace euphotic
