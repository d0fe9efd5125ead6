#include "euphotic/root_system.hpp"

#include "euphotic/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace euphotic {

namespace {

IntMatrix cartan_for(Family f, int n) {
    IntMatrix a(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](int i, int j, int aij, int aji) {  // 1-based nodes
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    switch (f) {
    case Family::A:
        for (int i = 1; i < n; ++i) link(i, i + 1, -1, -1);
        break;
    case Family::B:
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
        link(n - 1, n, -1, -2);
        break;
    case Family::C:
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
        link(n - 1, n, -2, -1);
        break;
    case Family::D:
        for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
        link(n - 2, n, -1, -1);
        break;
    case Family::E:
        link(1, 3, -1, -1);
        link(2, 4, -1, -1);
        for (int i = 3; i < n; ++i) link(i, i + 1, -1, -1);
        break;
    case Family::F:
        link(1, 2, -1, -1);
        link(2, 3, -1, -2);
        link(3, 4, -1, -1);
        break;
    case Family::G:
        link(1, 2, -1, -3);
        break;
    }
    return a;
}

void validate(Family f, int n) {
    bool ok = false;
    switch (f) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 3; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
    }
    if (!ok) throw InputError("invalid root system type " + family_name(f) + std::to_string(n));
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    }
    return "?";
}

Family parse_family(const std::string& tag, int& rank) {
    if (tag.empty()) throw InputError("empty root system type");
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(tag[0])));
    Family f;
    switch (c) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default: throw InputError("unknown root system type '" + tag + "'");
    }
    if (tag.size() > 1) {
        int r = 0;
        for (std::size_t i = 1; i < tag.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(tag[i])))
                throw InputError("unknown root system type '" + tag + "'");
            r = r * 10 + (tag[i] - '0');
        }
        if (rank != 0 && rank != r)
            throw InputError("rank " + std::to_string(rank) + " conflicts with type '" + tag + "'");
        rank = r;
    } else if (rank == 0) {
        if (f == Family::F) rank = 4;
        else if (f == Family::G) rank = 2;
        else throw InputError("type '" + tag + "' needs a rank");
    }
    return f;
}

RootSystem RootSystem::build(const std::string& type_tag, int rank) {
    Family f = parse_family(type_tag, rank);
    return build(f, rank);
}

RootSystem RootSystem::build(Family family, int rank) {
    validate(family, rank);
    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = rank;
    rs.cartan_ = cartan_for(family, rank);

    // Symmetrizer: d_i a_ij = d_j a_ji, found along the (connected) Dynkin graph.
    std::vector<Rat> d(rank, Rat(0));
    d[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < rank; ++j) {
            if (j == i || rs.cartan_[i][j] == 0 || !d[j].is_zero()) continue;
            d[j] = d[i] * Rat(rs.cartan_[i][j]) / Rat(rs.cartan_[j][i]);
            stack.push_back(j);
        }
    }
    BigInt den = 1;
    for (const auto& x : d) den = lcm(den, x.den());
    BigInt g = 0;
    for (const auto& x : d) g = gcd(g, x.num() * (den / x.den()));
    for (const auto& x : d) rs.sym_.push_back(static_cast<int>(x.num() * (den / x.den()) / g));

    // Positive roots by reflection closure of the simple roots.
    std::set<IntVec> pos;
    std::vector<IntVec> frontier;
    for (int i = 0; i < rank; ++i) {
        IntVec e(rank, 0);
        e[i] = 1;
        pos.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& b : frontier) {
            for (int i = 1; i <= rank; ++i) {
                IntVec r = rs.reflect_root(i, b);
                if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }) && pos.insert(r).second)
                    next.push_back(r);
            }
        }
        frontier = std::move(next);
    }
    std::vector<IntVec> all(pos.begin(), pos.end());
    for (const auto& p : pos) {
        IntVec n(p);
        for (auto& c : n) c = -c;
        all.push_back(n);
    }
    std::sort(all.begin(), all.end());
    rs.roots_ = std::move(all);
    int maxnorm = 0;
    for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
        rs.index_[rs.roots_[k]] = k;
        maxnorm = std::max(maxnorm, rs.inner(rs.roots_[k], rs.roots_[k]));
    }
    rs.neg_.resize(rs.roots_.size());
    rs.positive_.resize(rs.roots_.size());
    rs.long_.resize(rs.roots_.size());
    int best_height = -1;
    for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
        IntVec n(rs.roots_[k]);
        for (auto& c : n) c = -c;
        rs.neg_[k] = rs.index_.at(n);
        rs.positive_[k] = std::accumulate(rs.roots_[k].begin(), rs.roots_[k].end(), 0) > 0;
        rs.long_[k] = rs.inner(rs.roots_[k], rs.roots_[k]) == maxnorm;
        int h = rs.height(k);
        if (h > best_height) {
            best_height = h;
            rs.theta_ = rs.roots_[k];
        }
    }
    return rs;
}

std::string RootSystem::name() const { return family_name(family_) + std::to_string(rank_); }

bool RootSystem::is_classical() const {
    return family_ == Family::A || family_ == Family::B || family_ == Family::C || family_ == Family::D;
}

std::optional<std::size_t> RootSystem::index_of(const IntVec& coeffs) const {
    auto it = index_.find(coeffs);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t RootSystem::simple_index(int i) const {
    if (i < 1 || i > rank_) throw InputError("simple root index out of range: " + std::to_string(i));
    IntVec e(rank_, 0);
    e[i - 1] = 1;
    return index_.at(e);
}

std::vector<std::size_t> RootSystem::positive_roots() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < roots_.size(); ++k)
        if (positive_[k]) out.push_back(k);
    return out;
}

int RootSystem::height(std::size_t idx) const {
    return std::accumulate(roots_[idx].begin(), roots_[idx].end(), 0);
}

int RootSystem::inner(const IntVec& a, const IntVec& b) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            if (b[j] != 0) s += a[i] * b[j] * sym_[i] * cartan_[i][j];
    }
    return s;
}

IntVec RootSystem::coroot_values(const IntVec& gamma) const {
    const int gg = inner(gamma, gamma);
    if (gg == 0) throw InputError("coroot of the zero vector");
    IntVec out(rank_);
    for (int k = 0; k < rank_; ++k) {
        IntVec e(rank_, 0);
        e[k] = 1;
        int num = 2 * inner(e, gamma);
        if (num % gg != 0) throw InvariantViolation("non-integral coroot pairing");
        out[k] = num / gg;
    }
    return out;
}

int RootSystem::coroot_pairing(const IntVec& beta, const IntVec& gamma) const {
    const int gg = inner(gamma, gamma);
    int num = 2 * inner(beta, gamma);
    if (num % gg != 0) throw InvariantViolation("non-integral coroot pairing");
    return num / gg;
}

Rat RootSystem::pairing(const IntVec& root, const RatVec& x) const {
    if (static_cast<int>(x.size()) != rank_ || static_cast<int>(root.size()) != rank_)
        throw InputError("pairing: dimension mismatch");
    return dot(root, x);
}

RatVec RootSystem::reflect_point(int i, const RatVec& x) const {
    if (i < 1 || i > rank_) throw InputError("simple root index out of range: " + std::to_string(i));
    if (static_cast<int>(x.size()) != rank_) throw InputError("reflect_point: dimension mismatch");
    RatVec y(x);
    const Rat vi = x[i - 1];
    if (vi.is_zero()) return y;
    for (int j = 0; j < rank_; ++j)
        if (cartan_[i - 1][j] != 0) y[j] -= Rat(cartan_[i - 1][j]) * vi;
    return y;
}

RatVec RootSystem::reflect_point_by(const IntVec& gamma, const RatVec& x) const {
    Rat v = pairing(gamma, x);
    RatVec y(x);
    if (v.is_zero()) return y;
    IntVec cv = coroot_values(gamma);
    for (int k = 0; k < rank_; ++k)
        if (cv[k] != 0) y[k] -= v * Rat(cv[k]);
    return y;
}

IntVec RootSystem::reflect_root(int i, const IntVec& beta) const {
    int c = 0;
    for (int j = 0; j < rank_; ++j) c += beta[j] * cartan_[i - 1][j];
    IntVec r(beta);
    r[i - 1] -= c;
    return r;
}

RatVec RootSystem::apply(const Word& w, const RatVec& x) const {
    RatVec y(x);
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = reflect_point(*it, y);
    return y;
}

IntVec RootSystem::apply_to_root(const Word& w, const IntVec& beta) const {
    IntVec y(beta);
    for (auto it = w.rbegin(); it != w.rend(); ++it) y = reflect_root(*it, y);
    return y;
}

Word RootSystem::reflection_word(const IntVec& gamma) const {
    IntVec g(gamma);
    if (std::accumulate(g.begin(), g.end(), 0) < 0)
        for (auto& c : g) c = -c;
    if (!index_of(g)) throw InputError("reflection_word: not a root");
    for (int i = 1; i <= rank_; ++i) {
        IntVec e(rank_, 0);
        e[i - 1] = 1;
        if (g == e) return Word{i};
    }
    for (int i = 1; i <= rank_; ++i) {
        IntVec e(rank_, 0);
        e[i - 1] = 1;
        if (coroot_pairing(g, e) > 0) {
            Word inner_word = reflection_word(reflect_root(i, g));
            Word w{i};
            w.insert(w.end(), inner_word.begin(), inner_word.end());
            w.push_back(i);
            return w;
        }
    }
    throw InvariantViolation("reflection_word: no descent found");
}

bool RootSystem::is_dominant(const RatVec& x) const {
    return std::all_of(x.begin(), x.end(), [](const Rat& v) { return v >= Rat(0); });
}

std::pair<RatVec, Word> RootSystem::dominant_rep(const RatVec& x) const {
    if (static_cast<int>(x.size()) != rank_) throw InputError("dominant_rep: dimension mismatch");
    RatVec y(x);
    Word applied;
    for (;;) {
        int i = 0;
        for (int k = 0; k < rank_; ++k)
            if (y[k] < Rat(0)) { i = k + 1; break; }
        if (i == 0) break;
        y = reflect_point(i, y);
        applied.push_back(i);
    }
    std::reverse(applied.begin(), applied.end());
    return {y, applied};
}

IntMatrix RootSystem::matrix_of(const Word& w) const {
    IntMatrix m(rank_, IntVec(rank_, 0));
    for (int i = 0; i < rank_; ++i) m[i][i] = 1;
    // Left-multiply by each letter's matrix, last letter first.
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const int i = *it - 1;
        IntVec rowi = m[i];
        for (int j = 0; j < rank_; ++j) {
            if (cartan_[i][j] == 0) continue;
            for (int k = 0; k < rank_; ++k) m[j][k] -= cartan_[i][j] * rowi[k];
        }
    }
    return m;
}

unsigned long long RootSystem::weyl_order() const {
    auto fact = [](int n) {
        unsigned long long f = 1;
        for (int k = 2; k <= n; ++k) f *= static_cast<unsigned long long>(k);
        return f;
    };
    switch (family_) {
    case Family::A: return fact(rank_ + 1);
    case Family::B:
    case Family::C: return (1ULL << rank_) * fact(rank_);
    case Family::D: return (1ULL << (rank_ - 1)) * fact(rank_);
    case Family::E: return rank_ == 6 ? 51840ULL : rank_ == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152ULL;
    case Family::G: return 12ULL;
    }
    return 0;
}

int RootSystem::classical_dim() const {
    if (!is_classical()) throw InputError("classical coordinates exist only for types A-D");
    return family_ == Family::A ? rank_ + 1 : rank_;
}

RatVec RootSystem::to_classical(const RatVec& v) const {
    const int n = classical_dim();
    if (static_cast<int>(v.size()) != rank_) throw InputError("to_classical: dimension mismatch");
    RatVec x(n);
    switch (family_) {
    case Family::A: {
        Rat s;
        for (int k = 1; k <= rank_; ++k) s += Rat(k) * v[k - 1];
        x[n - 1] = -s / Rat(n);
        for (int i = n - 2; i >= 0; --i) x[i] = x[i + 1] + v[i];
        break;
    }
    case Family::B:
        x[n - 1] = v[n - 1];
        for (int i = n - 2; i >= 0; --i) x[i] = x[i + 1] + v[i];
        break;
    case Family::C:
        x[n - 1] = v[n - 1] / Rat(2);
        for (int i = n - 2; i >= 0; --i) x[i] = x[i + 1] + v[i];
        break;
    case Family::D:
        x[n - 1] = (v[n - 1] - v[n - 2]) / Rat(2);
        x[n - 2] = (v[n - 1] + v[n - 2]) / Rat(2);
        for (int i = n - 3; i >= 0; --i) x[i] = x[i + 1] + v[i];
        break;
    default: break;
    }
    return x;
}

RatVec RootSystem::from_classical(const RatVec& e) const {
    const int n = classical_dim();
    if (static_cast<int>(e.size()) != n) throw InputError("from_classical: expected " + std::to_string(n) + " coordinates");
    RatVec v(rank_);
    for (int i = 0; i + 1 < n && i < rank_; ++i) v[i] = e[i] - e[i + 1];
    switch (family_) {
    case Family::B: v[n - 1] = e[n - 1]; break;
    case Family::C: v[n - 1] = Rat(2) * e[n - 1]; break;
    case Family::D: v[n - 1] = e[n - 2] + e[n - 1]; break;
    default: break;
    }
    return v;
}

IntVec RootSystem::classical_root(const IntVec& c) const {
    const int n = classical_dim();
    IntVec e(n, 0);
    for (int i = 0; i < rank_; ++i) {
        if (c[i] == 0) continue;
        if (i + 1 < rank_ || family_ == Family::A) {
            e[i] += c[i];
            e[i + 1] -= c[i];
        } else if (family_ == Family::B) {
            e[n - 1] += c[i];
        } else if (family_ == Family::C) {
            e[n - 1] += 2 * c[i];
        } else {
            e[n - 2] += c[i];
            e[n - 1] += c[i];
        }
    }
    return e;
}

IntVec RootSystem::classical_root(std::size_t idx) const { return classical_root(roots_[idx]); }

RootSubset levi_data(const RootSystem& rs, const std::vector<int>& simple_subset) {
    std::vector<char> in(rs.rank(), 0);
    for (int i : simple_subset) {
        if (i < 1 || i > rs.rank()) throw InputError("simple root index out of range: " + std::to_string(i));
        in[i - 1] = 1;
    }
    RootSubset out;
    for (std::size_t k = 0; k < rs.num_roots(); ++k) {
        const IntVec& c = rs.root(k);
        bool ok = true;
        for (int i = 0; i < rs.rank() && ok; ++i)
            if (c[i] != 0 && !in[i]) ok = false;
        if (ok) out.members.push_back(k);
    }
    out.dim = static_cast<int>(out.members.size()) + rs.rank();
    return out;
}

RootSubset levi_data(const RootSystem& rs, const RatVec& functional) {
    RootSubset out;
    for (std::size_t k = 0; k < rs.num_roots(); ++k)
        if (rs.pairing(k, functional).is_zero()) out.members.push_back(k);
    out.dim = static_cast<int>(out.members.size()) + rs.rank();
    return out;
}

} // namespace euphotic
