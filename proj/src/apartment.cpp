#include "euphotic/apartment.hpp"

#include "euphotic/errors.hpp"
#include "euphotic/geometry.hpp"
#include "euphotic/weyl_group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace euphotic {

namespace {

void check_dim(const RootSystem& rs, const RatVec& x, const char* what) {
    if (static_cast<int>(x.size()) != rs.rank())
        throw InputError(std::string(what) + ": expected " + std::to_string(rs.rank()) + " value coordinates, got " +
                         std::to_string(x.size()));
}

long long to_ll(const BigInt& v) {
    if (v > BigInt(std::numeric_limits<long long>::max() / 4) || v < BigInt(std::numeric_limits<long long>::min() / 4))
        throw CapabilityError("coordinate magnitude too large for the orbit enumerator");
    return static_cast<long long>(v);
}

/// Integer data for the coroot-lattice test: λ ∈ Q^∨ iff λ ∈ ℤ^r and A λ ≡ 0 (mod den),
/// where A / den = (Cᵀ)⁻¹.
struct CorootTest {
    std::vector<std::vector<long long>> a;
    long long den = 1;

    explicit CorootTest(const RootSystem& rs) {
        const int r = rs.rank();
        std::vector<RatVec> ct(r, RatVec(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) ct[i][j] = Rat(rs.cartan(j, i));
        std::vector<RatVec> inv(r);
        for (int k = 0; k < r; ++k) {
            RatVec e(r, Rat(0));
            e[k] = 1;
            auto col = solve(ct, e);
            if (!col) throw InvariantViolation("singular Cartan matrix");
            for (int i = 0; i < r; ++i) inv[i].push_back((*col)[i]);
        }
        BigInt d = 1;
        for (const auto& row : inv) d = lcm(d, common_denominator(row));
        den = to_ll(d);
        a.assign(r, std::vector<long long>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) a[i][j] = to_ll(inv[i][j].num() * (d / inv[i][j].den()));
    }

    bool contains(const std::vector<long long>& lambda) const {
        if (den == 1) return true;
        for (const auto& row : a) {
            long long s = 0;
            for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * lambda[j];
            if (s % den != 0) return false;
        }
        return true;
    }
};

bool integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c.is_integer(); });
}

std::vector<long long> as_ll(const RatVec& v) {
    std::vector<long long> out;
    for (const auto& c : v) out.push_back(to_ll(c.num()));
    return out;
}

} // namespace

IntVec marks(const RootSystem& rs) {
    IntVec n{1};
    for (int c : rs.highest_root()) n.push_back(c);
    return n;
}

Rat affine_simple_value(const RootSystem& rs, int i, const RatVec& x) {
    if (i < 0 || i > rs.rank()) throw InputError("affine simple root index out of range: " + std::to_string(i));
    if (i == 0) return Rat(1) - rs.pairing(rs.highest_root(), x);
    return x[i - 1];
}

RatVec reflect_affine(const RootSystem& rs, int i, const RatVec& x) {
    if (i != 0) return rs.reflect_point(i, x);
    const Rat a0 = affine_simple_value(rs, 0, x);
    RatVec y(x);
    if (a0.is_zero()) return y;
    IntVec cv = rs.coroot_values(rs.highest_root());
    for (int k = 0; k < rs.rank(); ++k)
        if (cv[k] != 0) y[k] += a0 * Rat(cv[k]);
    return y;
}

Facet make_facet(const RootSystem& rs, std::vector<int> J) {
    std::sort(J.begin(), J.end());
    if (std::adjacent_find(J.begin(), J.end()) != J.end()) throw InputError("facet: repeated index in J");
    for (int j : J)
        if (j < 0 || j > rs.rank())
            throw InputError("facet: index " + std::to_string(j) + " outside 0.." + std::to_string(rs.rank()));
    if (static_cast<int>(J.size()) > rs.rank())
        throw InputError("facet: J must be a proper subset of the affine simple roots");
    const IntVec n = marks(rs);
    Facet f;
    f.J = J;
    for (int i = 0; i <= rs.rank(); ++i)
        if (!std::binary_search(J.begin(), J.end(), i)) f.m += n[i];
    f.barycenter.assign(rs.rank(), Rat(0));
    for (int i = 1; i <= rs.rank(); ++i)
        if (!std::binary_search(J.begin(), J.end(), i)) f.barycenter[i - 1] = Rat(1, f.m);
    for (int i = 0; i <= rs.rank(); ++i) {
        const Rat want = std::binary_search(J.begin(), J.end(), i) ? Rat(0) : Rat(1, f.m);
        if (affine_simple_value(rs, i, f.barycenter) != want)
            throw InvariantViolation("barycenter does not solve its defining system");
    }
    return f;
}

bool in_closed_alcove(const RootSystem& rs, const RatVec& x) {
    check_dim(rs, x, "in_closed_alcove");
    for (int i = 0; i <= rs.rank(); ++i)
        if (affine_simple_value(rs, i, x) < Rat(0)) return false;
    return true;
}

Lattice parse_lattice(const std::string& text) {
    if (text == "simply_connected" || text == "sc" || text == "simply-connected") return Lattice::SimplyConnected;
    if (text == "adjoint" || text == "ad") return Lattice::Adjoint;
    throw InputError("unknown lattice '" + text + "' (expected simply_connected or adjoint)");
}

std::string lattice_name(Lattice l) { return l == Lattice::SimplyConnected ? "simply_connected" : "adjoint"; }

bool in_lattice(const RootSystem& rs, Lattice lattice, const RatVec& lambda) {
    check_dim(rs, lambda, "in_lattice");
    if (!integral(lambda)) return false;
    if (lattice == Lattice::Adjoint) return true;
    return CorootTest(rs).contains(as_ll(lambda));
}

bool verify_witness(const RootSystem& rs, Lattice lattice, const RatVec& x, const RatVec& y,
                    const OrbitWitness& witness) {
    if (witness.lambda.size() != x.size()) return false;
    if (!in_lattice(rs, lattice, witness.lambda)) return false;
    return rs.apply(witness.w, x) + witness.lambda == y;
}

std::vector<OrbitPoint> orbit_points(const RootSystem& rs, const RatVec& x, Lattice lattice, const Rat& bound,
                                     unsigned long long max_box) {
    check_dim(rs, x, "orbit_points");
    std::vector<OrbitPoint> out;
    if (bound < Rat(0)) return out;
    const int r = rs.rank();
    const long long D = to_ll(common_denominator(x));
    std::vector<long long> X(r);
    for (int i = 0; i < r; ++i) X[i] = to_ll(x[i].num() * (BigInt(D) / x[i].den()));
    const long long bnum = to_ll(bound.num()), bden = to_ll(bound.den());

    // μ_i ranges with |x_i + μ_i| ≤ bound.
    std::vector<long long> lo(r), hi(r);
    unsigned long long box = 1;
    for (int i = 0; i < r; ++i) {
        lo[i] = to_ll((-bound - x[i]).floor());
        if (Rat(lo[i]) < -bound - x[i]) ++lo[i];
        hi[i] = to_ll((bound - x[i]).floor());
        if (hi[i] < lo[i]) return out;
        const unsigned long long width = static_cast<unsigned long long>(hi[i] - lo[i] + 1);
        if (box > max_box / width)
            throw CapabilityError("orbit enumeration box exceeds budget of " + std::to_string(max_box) +
                                  " translations; lower the bound");
        box *= width;
    }

    const CorootTest coroot(rs);
    std::vector<IntVec> pos;
    for (std::size_t k : rs.positive_roots()) pos.push_back(rs.root(k));
    // Simple roots are checked by the box; test the others, tallest first.
    std::sort(pos.begin(), pos.end(), [](const IntVec& a, const IntVec& b) {
        int ha = 0, hb = 0;
        for (int c : a) ha += c;
        for (int c : b) hb += c;
        return ha > hb;
    });

    std::map<RatVec, OrbitWitness> found;
    std::vector<long long> mu(lo);
    std::vector<long long> Z(r);
    for (;;) {
        bool ok = lattice == Lattice::Adjoint || coroot.contains(mu);
        if (ok) {
            for (int i = 0; i < r; ++i) Z[i] = X[i] + D * mu[i];
            for (const auto& a : pos) {
                long long s = 0;
                for (int i = 0; i < r; ++i) s += a[i] * Z[i];
                if (s < 0) s = -s;
                if (s * bden > D * bnum) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            RatVec muv(r);
            for (int i = 0; i < r; ++i) muv[i] = Rat(mu[i]);
            auto [y, w] = rs.dominant_rep(x + muv);
            if (!found.count(y)) found.emplace(y, OrbitWitness{w, rs.apply(w, muv)});
        }
        int i = 0;
        while (i < r && mu[i] == hi[i]) {
            mu[i] = lo[i];
            ++i;
        }
        if (i == r) break;
        ++mu[i];
    }
    for (auto& [y, w] : found) out.push_back(OrbitPoint{y, std::move(w)});
    return out;
}

bool fractional_pruning_applies(const RootSystem& rs, Lattice lattice) {
    switch (rs.family()) {
    case Family::A:
    case Family::C:
    case Family::D: return lattice == Lattice::SimplyConnected;
    case Family::B: return true;
    default: return false;
    }
}

std::vector<Rat> fractional_invariant(const RootSystem& rs, const RatVec& x) {
    RatVec e = rs.to_classical(x);
    std::vector<Rat> f;
    for (const auto& c : e) {
        Rat t = c.frac();
        if (rs.family() != Family::A && Rat(1) - t < t) t = Rat(1) - t;
        f.push_back(t);
    }
    std::sort(f.begin(), f.end());
    return f;
}

std::optional<OrbitWitness> orbit_contains(const RootSystem& rs, const RatVec& x, const RatVec& y, Lattice lattice,
                                           bool use_pruning) {
    check_dim(rs, x, "orbit_contains");
    check_dim(rs, y, "orbit_contains");
    if (use_pruning && fractional_pruning_applies(rs, lattice) &&
        fractional_invariant(rs, x) != fractional_invariant(rs, y))
        return std::nullopt;
    WeylGroup W(rs);
    const CorootTest coroot(rs);
    for (std::size_t k = 0; k < W.size(); ++k) {
        RatVec lambda = y - W.act(k, x);
        if (!integral(lambda)) continue;
        if (lattice == Lattice::SimplyConnected && !coroot.contains(as_ll(lambda))) continue;
        return OrbitWitness{W.word(k), lambda};
    }
    return std::nullopt;
}

std::pair<RatVec, OrbitWitness> facet_canonical(const RootSystem& rs, const std::vector<int>& J, const RatVec& y,
                                                OrbitWitness witness) {
    check_dim(rs, y, "facet_canonical");
    if (witness.lambda.empty()) witness.lambda.assign(rs.rank(), Rat(0));
    RatVec z(y);
    Word theta_word;
    IntVec theta_cv;
    for (int iter = 0;; ++iter) {
        if (iter > 1'000'000) throw InvariantViolation("W_P reflection descent did not terminate");
        int j = -1;
        for (int i : J)
            if (affine_simple_value(rs, i, z) < Rat(0)) {
                j = i;
                break;
            }
        if (j < 0) break;
        z = reflect_affine(rs, j, z);
        if (j > 0) {
            witness.w.insert(witness.w.begin(), j);
            witness.lambda = rs.reflect_point(j, witness.lambda);
        } else {
            if (theta_word.empty()) {
                theta_word = rs.reflection_word(rs.highest_root());
                theta_cv = rs.coroot_values(rs.highest_root());
            }
            witness.w.insert(witness.w.begin(), theta_word.begin(), theta_word.end());
            witness.lambda = rs.reflect_point_by(rs.highest_root(), witness.lambda) + to_rat(theta_cv);
        }
    }
    return {z, witness};
}

std::vector<RatVec> exceptional_base_points(const RootSystem& rs, const RatVec& x_Q, const Facet& facet_P,
                                            Lattice lattice) {
    std::set<RatVec> pts;
    std::vector<RatVec> frontier;
    for (auto& p : orbit_points(rs, x_Q, lattice, Rat(1))) {
        if (!in_closed_alcove(rs, p.y)) throw InvariantViolation("alcove orbit point outside the closed alcove");
        if (pts.insert(p.y).second) frontier.push_back(p.y);
    }
    while (!frontier.empty()) {
        std::vector<RatVec> next;
        for (const auto& z : frontier)
            for (int j : facet_P.J) {
                RatVec t = reflect_affine(rs, j, z);
                if (pts.insert(t).second) next.push_back(t);
            }
        frontier = std::move(next);
    }
    return {pts.begin(), pts.end()};
}

bool is_exceptional(const RootSystem& rs, const std::vector<RatVec>& base_points, const Facet& facet_P,
                    const RatVec& y) {
    RatVec c = facet_canonical(rs, facet_P.J, y).first;
    return std::binary_search(base_points.begin(), base_points.end(), c);
}

} // namespace euphotic
