#include "euphotic/span_lemma.hpp"

#include "euphotic/errors.hpp"
#include "euphotic/geometry.hpp"
#include "euphotic/weyl_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace euphotic {

namespace {

std::vector<char> membership(const RootSystem& rs, const std::vector<int>& subset) {
    std::vector<char> in(rs.num_roots(), 0);
    for (std::size_t k : levi_data(rs, subset).members) in[k] = 1;
    return in;
}

int rank_of(const RootSystem& rs, const std::vector<std::size_t>& roots) {
    std::vector<IntVec> vs;
    for (std::size_t k : roots) vs.push_back(rs.root(k));
    return span_rank(vs);
}

std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

} // namespace

RootSubset s_w_roots(const RootSystem& rs, const std::vector<int>& psi_subset, const std::vector<int>& q_subset,
                     const Word& w) {
    const auto in_psi = membership(rs, psi_subset);
    const auto in_q = membership(rs, q_subset);
    const Word inverse(w.rbegin(), w.rend());
    RootSubset out;
    for (std::size_t k = 0; k < rs.num_roots(); ++k) {
        if (!rs.is_positive(k) || in_psi[k]) continue;
        const std::size_t b = *rs.index_of(rs.apply_to_root(inverse, rs.root(k)));
        if (!rs.is_positive(b) && !in_q[b]) out.members.push_back(k);
    }
    out.dim = static_cast<int>(out.members.size()) + rs.rank();
    return out;
}

RootSubset rational_span_closure(const RootSystem& rs, const std::vector<std::size_t>& roots) {
    const int base = rank_of(rs, roots);
    RootSubset out;
    std::vector<std::size_t> probe = roots;
    probe.push_back(0);
    for (std::size_t k = 0; k < rs.num_roots(); ++k) {
        probe.back() = k;
        if (rank_of(rs, probe) == base) out.members.push_back(k);
    }
    out.dim = static_cast<int>(out.members.size()) + rs.rank();
    std::set<std::size_t> in(out.members.begin(), out.members.end());
    for (std::size_t a : out.members)
        for (std::size_t b : out.members) {
            IntVec s = rs.root(a);
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += rs.root(b)[i];
            auto k = rs.index_of(s);
            if (k && !in.count(*k)) throw InvariantViolation("Φ ∩ span is not closed under root addition");
        }
    return out;
}

int stabilizer_torus_dim(const RootSystem& rs, const std::vector<std::size_t>& roots) {
    return rs.rank() - rank_of(rs, rational_span_closure(rs, roots).members);
}

SpanLemmaReport verify_span_lemma(const RootSystem& rs, const std::vector<int>& psi_subset,
                                  const std::vector<int>& q_subset) {
    for (int i : psi_subset)
        if (i < 1 || i > rs.rank()) throw InputError("psi subset index out of range");
    for (int i : q_subset)
        if (i < 1 || i > rs.rank()) throw InputError("Q subset index out of range");
    WeylGroup W(rs);
    std::vector<std::size_t> parent(W.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t k = 0; k < W.size(); ++k) {
        for (int i : psi_subset) parent[find(parent, k)] = find(parent, W.left_mul(i, k));
        for (int i : q_subset) parent[find(parent, k)] = find(parent, W.right_mul(k, i));
    }
    std::vector<std::size_t> rep(W.size(), SIZE_MAX), size(W.size(), 0);
    auto better = [&](std::size_t a, std::size_t b) {
        if (W.length(a) != W.length(b)) return W.length(a) < W.length(b);
        return W.word(a) < W.word(b);
    };
    for (std::size_t k = 0; k < W.size(); ++k) {
        std::size_t r = find(parent, k);
        ++size[r];
        if (rep[r] == SIZE_MAX || better(k, rep[r])) rep[r] = k;
    }
    const std::size_t exceptional_root = find(parent, W.longest());

    std::vector<std::size_t> roots;
    for (std::size_t r = 0; r < W.size(); ++r)
        if (size[r]) roots.push_back(r);
    std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) { return better(rep[a], rep[b]); });

    SpanLemmaReport report;
    for (std::size_t r : roots) {
        DoubleCosetReport c;
        c.w = W.word(rep[r]);
        c.size = size[r];
        c.s_w = s_w_roots(rs, psi_subset, q_subset, c.w);
        c.span_rank = rank_of(rs, c.s_w.members);
        c.in_exceptional_coset = r == exceptional_root;
        c.stabilizer_torus_dim = stabilizer_torus_dim(rs, c.s_w.members);
        if (!c.in_exceptional_coset && c.span_rank >= rs.rank()) ++report.failures;
        report.cosets.push_back(std::move(c));
    }
    return report;
}

} // namespace euphotic
