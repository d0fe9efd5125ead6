#include "euphotic/toral_psi.hpp"

#include "euphotic/errors.hpp"

#include <set>

namespace euphotic {

namespace {

struct Label {
    int sign = 0;  // 0 for the zero block
    std::string symbol;
};

Label parse_label(const std::string& text, Family f) {
    if (text == "0" && f != Family::A) return {};
    std::string s = text;
    int sign = 1;
    if (s.rfind("+", 0) == 0) {
        s = s.substr(1);
    } else if (s.rfind("-", 0) == 0) {
        sign = -1;
        s = s.substr(1);
    } else if (s.rfind("\xE2\x88\x92", 0) == 0) {
        sign = -1;
        s = s.substr(3);
    }
    if (s.empty()) throw InputError("empty symbol in block label '" + text + "'");
    if (f == Family::A && sign < 0) throw InputError("type A block labels carry no sign: '" + text + "'");
    return {sign, s};
}

int coordinate_count(const BlockFunctional& psi) { return psi.family == Family::A ? psi.rank + 1 : psi.rank; }

std::vector<Label> coordinate_labels(const BlockFunctional& psi) {
    validate(psi);
    std::vector<Label> out(coordinate_count(psi));
    for (const auto& b : psi.blocks) {
        Label l = parse_label(b.label, psi.family);
        for (int c : b.coords) out[c - 1] = l;
    }
    return out;
}

} // namespace

void validate(const BlockFunctional& psi) {
    if (psi.family == Family::E || psi.family == Family::F || psi.family == Family::G)
        throw InputError("block functionals are defined for types A-D only");
    if (psi.rank < 1) throw InputError("block functional: rank must be positive");
    const int n = coordinate_count(psi);
    std::vector<int> seen(n, 0);
    std::set<std::pair<int, std::string>> labels;
    for (const auto& b : psi.blocks) {
        if (b.coords.empty()) throw InputError("block '" + b.label + "' is empty");
        Label l = parse_label(b.label, psi.family);
        if (!labels.insert({l.sign, l.symbol}).second) throw InputError("duplicate block label '" + b.label + "'");
        for (int c : b.coords) {
            if (c < 1 || c > n) throw InputError("block coordinate " + std::to_string(c) + " out of range");
            if (seen[c - 1]++) throw InputError("coordinate " + std::to_string(c) + " appears in two blocks");
        }
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i]) throw InputError("coordinate " + std::to_string(i + 1) + " is in no block");
}

std::map<std::string, int> symbolic_value(const RootSystem& rs, const BlockFunctional& psi, std::size_t root) {
    if (rs.family() != psi.family || rs.rank() != psi.rank) throw InputError("block functional does not match the group");
    const auto labels = coordinate_labels(psi);
    const IntVec e = rs.classical_root(root);
    std::map<std::string, int> out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0 || labels[i].sign == 0) continue;
        out[labels[i].symbol] += labels[i].sign * e[i];
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

CentralizerReport centralizer(const RootSystem& rs, const BlockFunctional& psi) {
    CentralizerReport r;
    for (std::size_t k = 0; k < rs.num_roots(); ++k) {
        if (symbolic_value(rs, psi, k).empty()) r.phi_psi.members.push_back(k);
        else ++r.swan_numerator;
    }
    r.phi_psi.dim = static_cast<int>(r.phi_psi.members.size()) + rs.rank();
    r.dim_Gpsi = r.phi_psi.dim;
    return r;
}

int swan_direct(const RootSystem& rs, const BlockFunctional& psi) { return centralizer(rs, psi).swan_numerator; }

int swan_prediction(int dim_L, int dim_Lpsi) { return dim_L - dim_Lpsi; }

int swan_graded(int m, int r_prime) {
    if (m < 1) throw InputError("swan_graded: m must be positive");
    if (r_prime % m != 0)
        throw ConsistencyError("#R' = " + std::to_string(r_prime) + " is not divisible by m = " + std::to_string(m));
    return r_prime / m;
}

RatVec instantiate(const BlockFunctional& psi, const std::map<std::string, Rat>& values) {
    const auto labels = coordinate_labels(psi);
    RatVec out;
    for (const auto& l : labels) {
        if (l.sign == 0) {
            out.push_back(Rat(0));
            continue;
        }
        auto it = values.find(l.symbol);
        if (it == values.end()) throw InputError("no value for symbol '" + l.symbol + "'");
        out.push_back(l.sign > 0 ? it->second : -it->second);
    }
    if (psi.family == Family::A) {
        Rat mean(0);
        for (const auto& v : out) mean += v;
        mean /= Rat(static_cast<long long>(out.size()));
        for (auto& v : out) v -= mean;
    }
    return out;
}

BlockFunctional psi_for_levi(const RootSystem& rs, const std::vector<int>& levi_subset) {
    if (!rs.is_classical()) throw InputError("psi_for_levi: types A-D only");
    const int r = rs.rank();
    std::vector<char> in(r + 1, 0);
    for (int i : levi_subset) {
        if (i < 1 || i > r) throw InputError("psi_for_levi: simple root index out of range");
        in[i] = 1;
    }
    BlockFunctional psi{rs.family(), r, {}};
    const int n = rs.classical_dim();

    // Chains of coordinates joined by e_i − e_{i+1}.
    const int chain_links = rs.family() == Family::A ? r : r - 1;
    std::vector<std::vector<int>> chains{{1}};
    for (int i = 1; i < n; ++i) {
        if (i <= chain_links && in[i]) chains.back().push_back(i + 1);
        else chains.push_back({i + 1});
    }
    if (rs.family() == Family::D && in[r] && !in[r - 1]) {
        // α_n = e_{n−1} + e_n alone: e_n carries the negative of e_{n−1}'s symbol.
        chains.pop_back();
    }

    int sym = 0;
    auto name = [&] { return "s" + std::to_string(++sym); };
    for (std::size_t c = 0; c < chains.size(); ++c) {
        const bool last = c + 1 == chains.size();
        bool zero = false;
        if (last && rs.family() != Family::A) {
            if (rs.family() == Family::D) zero = in[r] && in[r - 1];
            else zero = in[r];
        }
        if (zero) {
            psi.blocks.push_back({"0", chains[c]});
        } else {
            std::string s = name();
            psi.blocks.push_back({"+" + s, chains[c]});
            if (last && rs.family() == Family::D && in[r] && !in[r - 1]) psi.blocks.push_back({"-" + s, {n}});
        }
    }
    return psi;
}

} // namespace euphotic
