#include "euphotic/geometry.hpp"

#include "euphotic/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>

namespace euphotic {

namespace {

std::size_t common_dim(const std::vector<RatVec>& vs, std::size_t dim) {
    if (vs.empty()) return dim;
    std::size_t d = vs.front().size();
    for (const auto& v : vs)
        if (v.size() != d) throw InputError("dimension mismatch in vector set");
    if (dim != 0 && dim != d) throw InputError("dimension mismatch in vector set");
    return d;
}

/// One strict homogeneous inequality Σ a_j ξ_j > 0 and the input rows it combines.
struct Row {
    std::vector<BigInt> a;
    boost::dynamic_bitset<> hist;
    boost::dynamic_bitset<> support;  // variables occurring in some source row
};

void make_primitive(std::vector<BigInt>& a) {
    BigInt g = 0;
    for (const auto& x : a) g = gcd(g, x);
    if (g > 1)
        for (auto& x : a) x /= g;
}

bool all_zero(const std::vector<BigInt>& a) {
    return std::all_of(a.begin(), a.end(), [](const BigInt& x) { return x == 0; });
}

std::vector<BigInt> integer_row(const RatVec& v) {
    BigInt d = common_denominator(v);
    std::vector<BigInt> a(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) a[j] = v[j].num() * (d / v[j].den());
    make_primitive(a);
    return a;
}

/// Drops duplicate coefficient rows and rows whose history strictly contains another's.
std::vector<Row> prune(std::vector<Row> rows) {
    std::map<std::vector<BigInt>, std::size_t> seen;
    std::vector<Row> uniq;
    for (auto& r : rows) {
        auto it = seen.find(r.a);
        if (it == seen.end()) {
            seen.emplace(r.a, uniq.size());
            uniq.push_back(std::move(r));
        } else if (r.hist.count() < uniq[it->second].hist.count()) {
            uniq[it->second].hist = r.hist;
            uniq[it->second].support = r.support;
        }
    }
    if (uniq.size() > 4000) return uniq;
    std::vector<char> drop(uniq.size(), 0);
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        for (std::size_t j = 0; j < uniq.size() && !drop[i]; ++j) {
            if (i == j || drop[j]) continue;
            if (uniq[j].hist.is_proper_subset_of(uniq[i].hist)) drop[i] = 1;
        }
    }
    std::vector<Row> out;
    for (std::size_t i = 0; i < uniq.size(); ++i)
        if (!drop[i]) out.push_back(std::move(uniq[i]));
    return out;
}

Rat eval_rest(const std::vector<BigInt>& a, const RatVec& xi, std::size_t skip) {
    Rat s;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (j != skip && a[j] != 0) s += Rat(a[j]) * xi[j];
    return s;
}

} // namespace

namespace {

/// Fourier–Motzkin on the full given set; the caller guarantees d >= 1 and a nonempty set.
std::optional<RatVec> fourier_motzkin(const std::vector<RatVec>& vectors, std::size_t d) {

    std::vector<Row> rows;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        Row r{integer_row(vectors[i]), boost::dynamic_bitset<>(vectors.size()), boost::dynamic_bitset<>(d)};
        if (all_zero(r.a)) return std::nullopt;
        r.hist.set(i);
        for (std::size_t k = 0; k < d; ++k)
            if (r.a[k] != 0) r.support.set(k);
        rows.push_back(std::move(r));
    }
    rows = prune(std::move(rows));

    std::vector<std::vector<Row>> systems;
    std::vector<std::size_t> order;
    std::vector<char> eliminated(d, 0);
    for (std::size_t step = 0; step < d; ++step) {
        // Eliminate the variable producing the fewest combinations.
        std::size_t best = d, best_cost = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (eliminated[j]) continue;
            std::size_t p = 0, n = 0;
            for (const auto& r : rows) {
                if (r.a[j] > 0) ++p;
                else if (r.a[j] < 0) ++n;
            }
            std::size_t cost = p * n;
            if (best == d || cost < best_cost) {
                best = j;
                best_cost = cost;
            }
        }
        const std::size_t j = best;
        systems.push_back(rows);
        order.push_back(j);
        eliminated[j] = 1;

        std::vector<Row> pos, neg, next;
        for (auto& r : rows) {
            if (r.a[j] > 0) pos.push_back(std::move(r));
            else if (r.a[j] < 0) neg.push_back(std::move(r));
            else next.push_back(std::move(r));
        }
        for (const auto& p : pos) {
            for (const auto& n : neg) {
                boost::dynamic_bitset<> h = p.hist | n.hist;
                const BigInt cp = -n.a[j];
                const BigInt cn = p.a[j];
                std::vector<BigInt> a(d);
                for (std::size_t k = 0; k < d; ++k) a[k] = cp * p.a[k] + cn * n.a[k];
                make_primitive(a);
                if (all_zero(a)) return std::nullopt;
                // Chernikov–Imbert: a row built from more than 1 + (explicitly plus
                // implicitly eliminated variables) sources is redundant.
                boost::dynamic_bitset<> sup = p.support | n.support;
                std::size_t implicit = 0;
                for (std::size_t k = 0; k < d; ++k)
                    if (sup[k] && !eliminated[k] && a[k] == 0) ++implicit;
                if (h.count() > 1 + (step + 1) + implicit) continue;
                next.push_back(Row{std::move(a), std::move(h), std::move(sup)});
            }
        }
        rows = prune(std::move(next));
    }
    if (!rows.empty()) return std::nullopt;

    RatVec xi(d, Rat(0));
    for (std::size_t t = order.size(); t-- > 0;) {
        const std::size_t j = order[t];
        std::optional<Rat> lo, hi;
        for (const auto& r : systems[t]) {
            if (r.a[j] == 0) continue;
            Rat bound = -eval_rest(r.a, xi, j) / Rat(r.a[j]);
            if (r.a[j] > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        Rat v;
        if (lo && hi) {
            Rat cand(lo->floor() + 1);
            v = cand < *hi ? cand : (*lo + *hi) / Rat(2);
        } else if (lo) {
            v = Rat(lo->floor() + 1);
        } else if (hi) {
            v = Rat(-((-*hi).floor() + 1));
        } else {
            v = Rat(0);
        }
        xi[j] = v;
    }
    for (const auto& v : vectors)
        if (dot(v, xi) <= Rat(0))
            throw InvariantViolation("Fourier-Motzkin witness fails a constraint");
    return xi;
}

} // namespace

std::optional<RatVec> strict_cone_feasible(const std::vector<RatVec>& vectors, std::size_t dim) {
    const std::size_t d = common_dim(vectors, dim);
    if (vectors.empty()) {
        RatVec e(d == 0 ? 1 : d, Rat(0));
        e[0] = 1;
        return e;
    }
    if (d == 0) throw InputError("strict_cone_feasible needs dimension >= 1");

    // Constraint generation: eliminate on a working subset, then add the
    // constraints the subset witness violates. An infeasible subset proves
    // the whole set infeasible, so the loop is exact.
    std::vector<char> active(vectors.size(), 0);
    std::vector<RatVec> work;
    for (std::size_t i = 0; i < vectors.size() && work.size() < d + 1; ++i) {
        active[i] = 1;
        work.push_back(vectors[i]);
    }
    for (;;) {
        auto xi = fourier_motzkin(work, d);
        if (!xi) return std::nullopt;
        std::vector<std::pair<Rat, std::size_t>> violated;
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (active[i]) continue;
            Rat v = dot(vectors[i], *xi);
            if (v.sign() <= 0) violated.emplace_back(v / Rat(common_denominator(vectors[i])), i);
        }
        if (violated.empty()) return xi;
        std::sort(violated.begin(), violated.end());
        for (std::size_t k = 0; k < violated.size() && k < d; ++k) {
            active[violated[k].second] = 1;
            work.push_back(vectors[violated[k].second]);
        }
    }
}

std::optional<RatVec> hull_certificate(const std::vector<RatVec>& vectors) {
    if (vectors.empty()) return std::nullopt;
    const std::size_t d = common_dim(vectors, 0);
    const std::size_t n = vectors.size();
    const std::size_t rows = d + 1;
    const std::size_t cols = n + rows;  // λ variables, then one artificial per row

    // Tableau rows: [A | I | b]; constraint rows are the d coordinates and Σλ = 1.
    std::vector<RatVec> t(rows, RatVec(cols + 1, Rat(0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < n; ++k) t[i][k] = vectors[k][i];
    for (std::size_t k = 0; k < n; ++k) t[d][k] = 1;
    t[d][cols] = 1;
    for (std::size_t i = 0; i < rows; ++i) {
        if (t[i][cols] < Rat(0))
            for (auto& x : t[i]) x = -x;
        t[i][n + i] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = n + i;

    // Objective: minimize Σ artificials, expressed as reduced costs.
    RatVec cost(cols + 1, Rat(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k <= cols; ++k)
            if (k < n || k == cols) cost[k] -= t[i][k];

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t k = 0; k < cols; ++k)
            if (cost[k] < Rat(0)) { enter = k; break; }  // Bland: lowest index
        if (enter == cols) break;
        std::size_t leave = rows;
        Rat best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= Rat(0)) continue;
            Rat ratio = t[i][cols] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded direction cannot occur in phase one
        Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            Rat f = t[i][enter];
            for (std::size_t k = 0; k <= cols; ++k) t[i][k] -= f * t[leave][k];
        }
        if (!cost[enter].is_zero()) {
            Rat f = cost[enter];
            for (std::size_t k = 0; k <= cols; ++k) cost[k] -= f * t[leave][k];
        }
        basis[leave] = enter;
    }
    if (!cost[cols].is_zero()) return std::nullopt;  // artificial sum stayed positive

    RatVec lambda(n, Rat(0));
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] < n) lambda[basis[i]] = t[i][cols];
    Rat total;
    RatVec comb(d, Rat(0));
    for (std::size_t k = 0; k < n; ++k) {
        if (lambda[k] < Rat(0)) throw InvariantViolation("negative convex weight");
        total += lambda[k];
        for (std::size_t i = 0; i < d; ++i) comb[i] += lambda[k] * vectors[k][i];
    }
    if (total != Rat(1) || std::any_of(comb.begin(), comb.end(), [](const Rat& x) { return !x.is_zero(); }))
        throw InvariantViolation("hull certificate does not reproduce the origin");
    return lambda;
}

bool hull_contains_origin(const std::vector<RatVec>& vectors) {
    return hull_certificate(vectors).has_value();
}

int span_rank(const std::vector<RatVec>& vectors) {
    if (vectors.empty()) return 0;
    std::vector<RatVec> m = vectors;
    const std::size_t d = common_dim(m, 0);
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < d && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            if (m[i][col].is_zero()) continue;
            Rat f = m[i][col] / m[row][col];
            for (std::size_t k = col; k < d; ++k) m[i][k] -= f * m[row][k];
        }
        ++row;
        ++rank;
    }
    return rank;
}

int span_rank(const std::vector<IntVec>& vectors) {
    std::vector<RatVec> r;
    r.reserve(vectors.size());
    for (const auto& v : vectors) r.push_back(to_rat(v));
    return span_rank(r);
}

std::optional<RatVec> solve(const std::vector<RatVec>& m, const RatVec& b) {
    const std::size_t n = b.size();
    if (m.size() != n) throw InputError("solve: matrix is not square");
    std::vector<RatVec> a = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw InputError("solve: matrix is not square");
        a[i].push_back(b[i]);
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        Rat p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rat f = a[i][col];
            for (std::size_t k = col; k <= n; ++k) a[i][k] -= f * a[col][k];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

} // namespace euphotic
