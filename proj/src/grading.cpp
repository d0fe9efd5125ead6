#include "euphotic/grading.hpp"

#include "euphotic/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace euphotic {

namespace {

/// Level n with ⟨α, x⟩ + n = target, when it is an integer.
std::optional<int> level_for(const Rat& pairing, const Rat& target) {
    Rat n = target - pairing;
    if (!n.is_integer()) return std::nullopt;
    return static_cast<int>(n.num());
}

} // namespace

GradingReport grade(const RootSystem& rs, const Facet& facet) {
    GradingReport g;
    g.facet = facet;
    g.m = facet.m;
    g.dims.assign(g.m, 0);
    g.dims[0] = rs.rank();
    g.vp_has_cartan = g.m == 1;
    const Rat step(1, g.m);
    std::set<Rat> residues{Rat(0)};
    for (std::size_t k = 0; k < rs.num_roots(); ++k) {
        const Rat p = rs.pairing(k, facet.barycenter);
        const Rat f = p.frac();
        residues.insert(f);
        const Rat idx = f * Rat(g.m);
        if (!idx.is_integer()) throw InvariantViolation("root value at the barycenter is not a multiple of 1/m");
        ++g.dims[static_cast<int>(idx.num())];
        if (auto n = level_for(p, Rat(0))) g.levi_roots.push_back({k, *n});
        if (auto n = level_for(p, step)) g.vp_weights.push_back({k, *n});
        if (auto n = level_for(p, -step)) g.vp_dual_weights.push_back({k, *n});
    }
    std::set<Rat> expected;
    for (int i = 0; i < g.m; ++i) expected.insert(Rat(i, g.m));
    if (residues != expected) throw InvariantViolation("grading residues differ from {0, 1/m, ..., (m-1)/m}");

    const int total = std::accumulate(g.dims.begin(), g.dims.end(), 0);
    if (total != static_cast<int>(rs.num_roots()) + rs.rank()) throw InvariantViolation("graded dimensions do not sum to dim g");
    for (int i = 1; i < g.m; ++i)
        if (g.dims[i] != g.dims[g.m - i]) throw InvariantViolation("graded dimensions are not palindromic");
    if (g.m >= 2 && g.dims[1] != static_cast<int>(g.vp_weights.size()))
        throw InvariantViolation("d_1 differs from the number of V_P weights");
    std::set<std::size_t> grads;
    for (const auto& a : g.vp_dual_weights)
        if (!grads.insert(a.gradient).second) throw InvariantViolation("two V_P* weights share a gradient");
    return g;
}

int levi_dim(const RootSystem& rs, const Facet& facet) { return grade(rs, facet).dims[0]; }

} // namespace euphotic
