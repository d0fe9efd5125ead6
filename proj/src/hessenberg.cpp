#include "euphotic/hessenberg.hpp"

#include "euphotic/errors.hpp"
#include "euphotic/geometry.hpp"
#include "euphotic/threads.hpp"
#include "euphotic/weyl_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace euphotic {

bool RootBound::holds(const RootSystem& rs, const RatVec& y) const {
    const Rat v = rs.pairing(root, y);
    if (lower && (lower_strict ? !(v > *lower) : !(v >= *lower))) return false;
    if (upper && (upper_strict ? !(v < *upper) : !(v <= *upper))) return false;
    return true;
}

std::string RootBound::describe() const {
    std::ostringstream os;
    if (lower) os << lower->str() << (lower_strict ? " < " : " <= ");
    os << "<(";
    for (std::size_t i = 0; i < root.size(); ++i) os << (i ? "," : "") << root[i];
    os << "),y>";
    if (upper) os << (upper_strict ? " < " : " <= ") << upper->str();
    return os.str();
}

bool in_region(const RootSystem& rs, const Region& region, const RatVec& y) {
    return std::any_of(region.begin(), region.end(), [&](const RootBound& b) { return b.holds(rs, y); });
}

std::vector<AffineRoot> qw_roots(const RootSystem& rs, const GradingReport& g, const RatVec& y) {
    std::vector<AffineRoot> out;
    for (const auto& a : g.levi_roots)
        if (a.value(rs, y) <= Rat(0)) out.push_back(a);
    return out;
}

std::vector<AffineRoot> vw_perp(const RootSystem& rs, const GradingReport& g, const RatVec& y) {
    std::vector<AffineRoot> out;
    for (const auto& a : g.vp_dual_weights)
        if (a.value(rs, y) < Rat(0)) out.push_back(a);

    // Gradient form over every root occurring in V_P*.
    const Rat inv_m(1, g.m);
    const RatVec& xp = g.facet.barycenter;
    std::vector<std::size_t> by_gradient;
    for (std::size_t k = 0; k < rs.num_roots(); ++k) {
        const Rat p = rs.pairing(k, xp);
        if (!(p + inv_m).is_integer()) continue;
        if (rs.pairing(k, y - xp) < inv_m) by_gradient.push_back(k);
    }
    std::vector<std::size_t> by_affine;
    for (const auto& a : out) by_affine.push_back(a.gradient);
    std::sort(by_affine.begin(), by_affine.end());
    if (by_affine != by_gradient) throw InvariantViolation("V_w-perp affine and gradient forms disagree");
    return out;
}

bool halfspace_empty(const RootSystem& rs, const HessenbergDatum& d) {
    if (d.zero_weight) return false;
    std::vector<RatVec> vs;
    for (std::size_t k : d.vw_perp_gradients) vs.push_back(to_rat(rs.root(k)));
    return strict_cone_feasible(vs, rs.rank()).has_value();
}

bool simple_root_meager(const RootSystem& rs, const Facet& facet, const RatVec& y) {
    if (!facet.hyperspecial())
        throw CapabilityError("the simple-root gate applies to the hyperspecial facet at the origin only");
    if (static_cast<int>(y.size()) != rs.rank()) throw InputError("simple_root_meager: dimension mismatch");
    return std::any_of(y.begin(), y.end(), [](const Rat& v) { return v >= Rat(1); });
}

bool rule_empty(const RootSystem& rs, const HessenbergDatum& d, const std::vector<GradientRule>& rules) {
    std::set<IntVec> present;
    for (std::size_t k : d.vw_perp_gradients) present.insert(rs.root(k));
    for (const auto& rule : rules) {
        if (rule.empty()) continue;
        if (std::none_of(rule.begin(), rule.end(), [&](const IntVec& g) { return present.count(g) > 0; }))
            return true;
    }
    return false;
}

HessenbergDatum make_datum(const RootSystem& rs, const GradingReport& g, const RatVec& y, OrbitWitness witness,
                           const std::vector<GradientRule>* rules, const std::vector<RatVec>* base_points) {
    HessenbergDatum d;
    d.y = y;
    d.witness = std::move(witness);
    d.qw_roots = qw_roots(rs, g, y);
    d.vw_perp = vw_perp(rs, g, y);
    for (const auto& a : d.vw_perp) d.vw_perp_gradients.push_back(a.gradient);
    std::sort(d.vw_perp_gradients.begin(), d.vw_perp_gradients.end());
    // The imaginary root (0, −1) has value −1 < 0 everywhere.
    d.zero_weight = g.vp_has_cartan;
    if (!d.zero_weight) {
        std::vector<RatVec> vs;
        for (std::size_t k : d.vw_perp_gradients) vs.push_back(to_rat(rs.root(k)));
        d.halfspace_witness = strict_cone_feasible(vs, rs.rank());
        d.halfspace_empty = d.halfspace_witness.has_value();
    }
    if (g.facet.hyperspecial()) d.simple_root_meager = simple_root_meager(rs, g.facet, y);
    if (rules) d.rule_empty = rule_empty(rs, d, *rules);
    if (base_points) d.exceptional = is_exceptional(rs, *base_points, g.facet, y);
    return d;
}

EnumerationResult enumerate_candidates(const RootSystem& rs, const Facet& facet_P, const RatVec& x_Q,
                                       const EnumerationOptions& opts) {
    EnumerationResult res;
    const GradingReport g = grade(rs, facet_P);
    auto dominant = orbit_points(rs, x_Q, opts.lattice, opts.bound);
    res.dominant_points = dominant.size();

    // One representative per W_P-orbit; the first witness found is kept.
    std::map<RatVec, OrbitWitness> reps;
    if (facet_P.hyperspecial()) {
        for (auto& p : dominant) reps.emplace(p.y, std::move(p.witness));
    } else {
        WeylGroup W(rs);
        for (const auto& p : dominant) {
            for (std::size_t k = 0; k < W.size(); ++k) {
                OrbitWitness wit;
                wit.w = W.word(k);
                wit.w.insert(wit.w.end(), p.witness.w.begin(), p.witness.w.end());
                wit.lambda = W.act(k, p.witness.lambda);
                auto [c, cw] = facet_canonical(rs, facet_P.J, W.act(k, p.y), std::move(wit));
                reps.emplace(std::move(c), std::move(cw));
            }
        }
    }
    res.cosets = reps.size();
    if (opts.compute_exceptional) res.base_points = exceptional_base_points(rs, x_Q, facet_P, opts.lattice);

    std::vector<std::pair<RatVec, OrbitWitness>> work;
    for (auto& [y, w] : reps) {
        bool keep = std::all_of(opts.predicates.begin(), opts.predicates.end(),
                                [&](const RootBound& b) { return b.holds(rs, y); });
        if (keep) work.emplace_back(y, std::move(w));
        else ++res.filtered;
    }
    res.data.resize(work.size());
    const auto* rules = opts.rules ? &*opts.rules : nullptr;
    const auto* base = opts.compute_exceptional ? &res.base_points : nullptr;
    parallel_for(work.size(), [&](std::size_t i) {
        res.data[i] = make_datum(rs, g, work[i].first, std::move(work[i].second), rules, base);
    });
    return res;
}

} // namespace euphotic
