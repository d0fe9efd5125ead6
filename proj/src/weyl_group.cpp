#include "euphotic/weyl_group.hpp"

#include "euphotic/errors.hpp"

#include <algorithm>

namespace euphotic {

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(&rs), rank_(rs.rank()), r2_(rs.rank() * rs.rank()) {
    const unsigned long long order = rs.weyl_order();
    if (order > kCap)
        throw CapabilityError("Weyl group of " + rs.name() + " has " + std::to_string(order) +
                              " elements, above the enumeration cap of " + std::to_string(kCap));
    words_.reserve(order);
    mats_.reserve(order * r2_);

    std::vector<int> id(r2_, 0);
    for (int i = 0; i < rank_; ++i) id[i * rank_ + i] = 1;
    mats_.insert(mats_.end(), id.begin(), id.end());
    words_.push_back({});
    parent_.push_back(0);
    first_letter_.push_back(0);
    index_[key_of(id.data())] = 0;

    // Level-by-level BFS; s_i·u with the smallest word [i]+word(u) wins each new element.
    std::size_t level_begin = 0, level_end = 1;
    while (level_begin < level_end) {
        struct Cand {
            std::vector<int> mat;
            Word word;
            std::size_t parent;
            int letter;
        };
        std::map<IntVec, Cand> fresh;
        for (std::size_t u = level_begin; u < level_end; ++u) {
            for (int i = 1; i <= rank_; ++i) {
                std::vector<int> m(mats_.begin() + u * r2_, mats_.begin() + (u + 1) * r2_);
                const int a = i - 1;
                std::vector<int> rowa(m.begin() + a * rank_, m.begin() + (a + 1) * rank_);
                for (int j = 0; j < rank_; ++j) {
                    const int c = rs.cartan(a, j);
                    if (c == 0) continue;
                    for (int k = 0; k < rank_; ++k) m[j * rank_ + k] -= c * rowa[k];
                }
                IntVec key = key_of(m.data());
                if (index_.count(key)) continue;
                Word w{i};
                w.insert(w.end(), words_[u].begin(), words_[u].end());
                auto it = fresh.find(key);
                if (it == fresh.end()) {
                    fresh.emplace(std::move(key), Cand{std::move(m), std::move(w), u, i});
                } else if (w < it->second.word) {
                    it->second = Cand{std::move(m), std::move(w), u, i};
                }
            }
        }
        level_begin = level_end;
        // Deterministic order inside a level: by word.
        std::vector<std::pair<Word, IntVec>> order;
        order.reserve(fresh.size());
        for (auto& [k, c] : fresh) order.emplace_back(c.word, k);
        std::sort(order.begin(), order.end());
        for (auto& [w, k] : order) {
            Cand& c = fresh.at(k);
            index_[k] = words_.size();
            words_.push_back(std::move(c.word));
            mats_.insert(mats_.end(), c.mat.begin(), c.mat.end());
            parent_.push_back(c.parent);
            first_letter_.push_back(c.letter);
        }
        level_end = words_.size();
    }
    if (words_.size() != order)
        throw InvariantViolation("Weyl group enumeration produced " + std::to_string(words_.size()) +
                                 " elements, expected " + std::to_string(order));

    // Root permutations, following the BFS parent links: w = s_i·parent.
    const std::size_t nr = rs.num_roots();
    std::vector<std::vector<std::uint16_t>> simple(rank_ + 1, std::vector<std::uint16_t>(nr));
    for (int i = 1; i <= rank_; ++i)
        for (std::size_t a = 0; a < nr; ++a)
            simple[i][a] = static_cast<std::uint16_t>(*rs.index_of(rs.reflect_root(i, rs.root(a))));
    perms_.resize(words_.size());
    perms_[0].resize(nr);
    for (std::size_t a = 0; a < nr; ++a) perms_[0][a] = static_cast<std::uint16_t>(a);
    for (std::size_t k = 1; k < words_.size(); ++k) {
        const auto& p = perms_[parent_[k]];
        const auto& s = simple[first_letter_[k]];
        perms_[k].resize(nr);
        for (std::size_t a = 0; a < nr; ++a) perms_[k][a] = s[p[a]];
    }
}

IntVec WeylGroup::key_of(const int* mat) const {
    IntVec key(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) key[i] += mat[i * rank_ + j];
    return key;
}

std::size_t WeylGroup::lookup(const std::vector<int>& mat) const {
    auto it = index_.find(key_of(mat.data()));
    if (it == index_.end()) throw InvariantViolation("Weyl group element not found");
    return it->second;
}

RatVec WeylGroup::act(std::size_t k, const RatVec& x) const {
    RatVec y(rank_, Rat(0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            const int e = entry(k, i, j);
            if (e != 0) y[i] += Rat(e) * x[j];
        }
    return y;
}

std::size_t WeylGroup::left_mul(int i, std::size_t k) const {
    std::vector<int> m(mats_.begin() + k * r2_, mats_.begin() + (k + 1) * r2_);
    const int a = i - 1;
    std::vector<int> rowa(m.begin() + a * rank_, m.begin() + (a + 1) * rank_);
    for (int j = 0; j < rank_; ++j) {
        const int c = rs_->cartan(a, j);
        if (c == 0) continue;
        for (int col = 0; col < rank_; ++col) m[j * rank_ + col] -= c * rowa[col];
    }
    return lookup(m);
}

std::size_t WeylGroup::right_mul(std::size_t k, int i) const {
    // S_i differs from the identity only in column i: (S_i)[j][i] = δ_ji − a_ij.
    std::vector<int> m(mats_.begin() + k * r2_, mats_.begin() + (k + 1) * r2_);
    const int a = i - 1;
    for (int r = 0; r < rank_; ++r) {
        int s = 0;
        for (int j = 0; j < rank_; ++j) s += m[r * rank_ + j] * rs_->cartan(a, j);
        m[r * rank_ + a] -= s;
    }
    return lookup(m);
}

} // namespace euphotic
