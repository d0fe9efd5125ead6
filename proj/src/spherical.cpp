#include "euphotic/spherical.hpp"

#include "euphotic/errors.hpp"
#include "euphotic/spherical_data.hpp"
#include "euphotic/threads.hpp"
#include "euphotic/toral_psi.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace euphotic {

namespace {

std::string trim(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && ws(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && ws(s[i])) ++i;
    return s.substr(i);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

int parse_int(const std::string& s, const std::string& context) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw InputError("bad integer '" + s + "' in '" + context + "'");
    return std::stoi(s);
}

/// Evaluates "k", "n", "m", "n-1", "m+1", ... for table templates.
int eval_expr(const std::string& text, int n, int m) {
    std::string s = trim(text);
    std::size_t op = s.find_first_of("+-", 1);
    std::string base = trim(s.substr(0, op));
    int v = base == "n" ? n : base == "m" ? m : parse_int(base, text);
    if (op != std::string::npos) {
        int off = parse_int(trim(s.substr(op + 1)), text);
        v += s[op] == '+' ? off : -off;
    }
    return v;
}

std::vector<int> complement(int rank, const std::set<int>& removed) {
    std::vector<int> out;
    for (int i = 1; i <= rank; ++i)
        if (!removed.count(i)) out.push_back(i);
    return out;
}

int levi_dim_of(const RootSystem& rs, const std::vector<int>& levi) { return levi_data(rs, levi).dim; }

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

// Type A: partition ↔ Levi of consecutive blocks.
std::vector<int> levi_of_partition(const std::vector<int>& parts) {
    std::vector<int> levi;
    int pos = 0;
    for (int p : parts) {
        for (int k = 1; k < p; ++k) levi.push_back(pos + k);
        pos += p;
    }
    return levi;
}

std::vector<int> partition_of_levi(int rank, const std::vector<int>& levi) {
    std::set<int> in(levi.begin(), levi.end());
    std::vector<int> parts;
    int len = 1;
    for (int i = 1; i <= rank; ++i) {
        if (in.count(i)) {
            ++len;
        } else {
            parts.push_back(len);
            len = 1;
        }
    }
    parts.push_back(len);
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::string partition_label(const std::vector<int>& parts) { return "(" + join_ints(parts) + ")"; }

std::vector<int> parse_partition(const std::string& text, int n, int m) {
    std::string s = trim(text);
    if (!s.empty() && s.front() == '(') s = s.substr(1);
    if (!s.empty() && s.back() == ')') s.pop_back();
    std::vector<int> parts;
    for (const auto& tok : split(s, ',')) {
        auto caret = tok.find('^');
        int part = eval_expr(tok.substr(0, caret), n, m);
        int reps = caret == std::string::npos ? 1 : eval_expr(tok.substr(caret + 1), n, m);
        if (part < 1 || reps < 1) throw InputError("partition parts must be positive in '" + text + "'");
        parts.insert(parts.end(), reps, part);
    }
    if (std::accumulate(parts.begin(), parts.end(), 0) != n)
        throw InputError("'" + text + "' is not a partition of " + std::to_string(n));
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

// Types B/C/D: flag labels ↔ removed simple roots.
std::set<int> parse_flag(const RootSystem& rs, const std::string& text, int n_subst) {
    std::string s = trim(text);
    if (s.rfind("P_", 0) != 0) throw InputError("flag label must start with P_: '" + text + "'");
    s = s.substr(2);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw InputError("unbalanced braces in '" + text + "'");
        s = s.substr(1, s.size() - 2);
    }
    const int n = rs.rank();
    const bool d = rs.family() == Family::D;
    std::set<int> removed;
    int prev = 0;
    for (std::string tok : split(s, ',')) {
        int sign = 0;
        if (!tok.empty() && tok.back() == '+') {
            sign = 1;
            tok.pop_back();
        } else if (!tok.empty() && tok.back() == '-') {
            sign = -1;
            tok.pop_back();
        } else if (tok.size() >= 3 && tok.compare(tok.size() - 3, 3, "\xE2\x88\x92") == 0) {
            sign = -1;
            tok.resize(tok.size() - 3);
        }
        int v = eval_expr(tok, n_subst, 0);
        if (v < 1 || v > n || v <= prev) throw InputError("flag indices must increase within 1..n in '" + text + "'");
        prev = v;
        if (sign != 0 && !(d && v == n)) throw InputError("a class sign is only meaningful on P_n in type D: '" + text + "'");
        if (!d) {
            removed.insert(v);
        } else if (v == n - 1) {
            removed.insert({n - 1, n});
        } else if (v == n) {
            removed.insert(sign < 0 ? n - 1 : n);
        } else {
            removed.insert(v);
        }
    }
    return removed;
}

std::string flag_label(const RootSystem& rs, const std::set<int>& removed) {
    const int n = rs.rank();
    std::vector<std::string> toks;
    if (rs.family() == Family::D) {
        for (int i : removed)
            if (i < n - 1) toks.push_back(std::to_string(i));
        bool a = removed.count(n - 1), b = removed.count(n);
        if (a && b) toks.push_back(std::to_string(n - 1));
        else if (b) toks.push_back(std::to_string(n) + "+");
        else if (a) toks.push_back(std::to_string(n) + "-");
    } else {
        for (int i : removed) toks.push_back(std::to_string(i));
    }
    if (toks.empty()) return "G";
    if (toks.size() == 1) return "P_" + toks[0];
    std::string out = "P_{";
    for (std::size_t i = 0; i < toks.size(); ++i) out += (i ? "," : "") + toks[i];
    return out + "}";
}

void require_classical(const RootSystem& rs) {
    if (!rs.is_classical()) throw InputError("spherical specs are defined for types A-D only");
}

ParabolicSpec parse_template(const RootSystem& rs, const std::string& text) {
    require_classical(rs);
    if (rs.family() == Family::A) {
        const int n = rs.rank() + 1;
        auto parts = parse_partition(text, n, n / 2);
        return {partition_label(parts), levi_of_partition(parts), levi_dim_of(rs, levi_of_partition(parts))};
    }
    auto removed = parse_flag(rs, text, rs.rank());
    auto levi = complement(rs.rank(), removed);
    return {flag_label(rs, removed), levi, levi_dim_of(rs, levi)};
}

/// Diagram automorphisms of D_n as permutations of 1..n (index 0 unused).
std::vector<std::vector<int>> d_automorphisms(int n) {
    std::vector<int> id(n + 1);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> out;
    if (n == 4) {
        std::vector<int> legs{1, 3, 4};
        do {
            auto p = id;
            p[1] = legs[0];
            p[3] = legs[1];
            p[4] = legs[2];
            out.push_back(p);
        } while (std::next_permutation(legs.begin(), legs.end()));
    } else {
        out.push_back(id);
        auto p = id;
        std::swap(p[n - 1], p[n]);
        out.push_back(p);
    }
    return out;
}

ParabolicSpec permuted(const RootSystem& rs, const ParabolicSpec& s, const std::vector<int>& perm) {
    std::vector<int> levi;
    for (int i : s.levi) levi.push_back(perm[i]);
    return spec_from_levi(rs, levi);
}

const nlohmann::json& table() {
    static const nlohmann::json t = nlohmann::json::parse(detail::kSphericalPairsJson);
    return t;
}

bool rank_matches(const nlohmann::json& c, int n, int& m) {
    const std::string kind = c.at("kind");
    if (kind == "any") return n >= c.at("min").get<int>();
    if (kind == "exact") return n == c.at("n").get<int>();
    if (kind == "even") {
        m = n / 2;
        return n % 2 == 0 && m >= c.at("m_min").get<int>();
    }
    if (kind == "odd") {
        m = (n - 1) / 2;
        return n % 2 == 1 && m >= c.at("m_min").get<int>();
    }
    throw InvariantViolation("unknown rank constraint kind in spherical table: " + kind);
}

ParabolicSpec instantiate_spec(const RootSystem& rs, const std::string& text, int n, int m) {
    if (rs.family() == Family::A) {
        auto parts = parse_partition(text, n, m);
        auto levi = levi_of_partition(parts);
        return {partition_label(parts), levi, levi_dim_of(rs, levi)};
    }
    auto removed = parse_flag(rs, text, n);
    auto levi = complement(rs.rank(), removed);
    return {flag_label(rs, removed), levi, levi_dim_of(rs, levi)};
}

} // namespace

ParabolicSpec parse_spec(const RootSystem& rs, const std::string& text) { return parse_template(rs, text); }

ParabolicSpec spec_from_levi(const RootSystem& rs, std::vector<int> levi) {
    require_classical(rs);
    std::sort(levi.begin(), levi.end());
    levi.erase(std::unique(levi.begin(), levi.end()), levi.end());
    for (int i : levi)
        if (i < 1 || i > rs.rank()) throw InputError("Levi simple root index out of range");
    ParabolicSpec s;
    s.levi = levi;
    s.dim = levi_dim_of(rs, levi);
    if (rs.family() == Family::A) {
        s.label = partition_label(partition_of_levi(rs.rank(), levi));
    } else {
        std::set<int> in(levi.begin(), levi.end()), removed;
        for (int i = 1; i <= rs.rank(); ++i)
            if (!in.count(i)) removed.insert(i);
        s.label = flag_label(rs, removed);
    }
    return s;
}

DimEquality dim_equality(const RootSystem& rs, const ParabolicSpec& psi, const ParabolicSpec& q) {
    DimEquality d;
    d.dim_Gpsi = levi_dim_of(rs, psi.levi);
    d.dim_LQ = levi_dim_of(rs, q.levi);
    d.num_roots = static_cast<int>(rs.num_roots());
    const int via_psi = centralizer(rs, psi_for_levi(rs, psi.levi)).dim_Gpsi;
    if (via_psi != d.dim_Gpsi)
        throw InvariantViolation("centralizer dimension " + std::to_string(via_psi) + " differs from Levi dimension " +
                                 std::to_string(d.dim_Gpsi) + " for " + psi.label);
    d.holds = d.dim_Gpsi + d.dim_LQ == d.num_roots;
    return d;
}

int spherical_data_version() { return table().at("version").get<int>(); }

int min_listed_rank(Family family) {
    switch (family) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 3;
    case Family::D: return 4;
    default: return 0;
    }
}

PaperList paper_list(Family family, int rank) {
    PaperList out;
    if (family != Family::A && family != Family::B && family != Family::C && family != Family::D) {
        out.note = "no listed pairs for exceptional types";
        return out;
    }
    if (rank < min_listed_rank(family)) {
        out.note = "rank below the listed range for type " + family_name(family);
        return out;
    }
    auto rs = RootSystem::build(family, rank);
    const int n = family == Family::A ? rank + 1 : rank;
    std::map<std::pair<std::string, std::string>, std::size_t> seen;
    for (const auto& c : table().at("cases")) {
        if (c.at("type").get<std::string>() != family_name(family)) continue;
        int m = 0;
        if (!rank_matches(c.at("n"), n, m)) continue;
        SphericalPair base;
        base.family = family;
        base.rank = rank;
        base.psi = instantiate_spec(rs, c.at("psi"), n, m);
        base.q = instantiate_spec(rs, c.at("q"), n, m);
        base.in_paper_list = true;
        base.paper_case = c.at("cite");
        std::vector<SphericalPair> variants{base};
        if (family == Family::D) {
            variants.clear();
            for (const auto& perm : d_automorphisms(rank)) {
                SphericalPair v = base;
                v.psi = permuted(rs, base.psi, perm);
                v.q = permuted(rs, base.q, perm);
                variants.push_back(v);
            }
        }
        for (auto& v : variants) {
            v.dims = dim_equality(rs, v.psi, v.q);
            auto key = std::make_pair(v.psi.label, v.q.label);
            auto it = seen.find(key);
            if (it != seen.end()) {
                auto& existing = out.pairs[it->second];
                if (existing.paper_case.find(v.paper_case) == std::string::npos)
                    existing.paper_case += "; " + v.paper_case;
                continue;
            }
            seen.emplace(key, out.pairs.size());
            out.pairs.push_back(std::move(v));
        }
    }
    if (out.pairs.empty()) out.note = "no listed pairs for " + rs.name();
    return out;
}

std::vector<ParabolicSpec> candidate_specs(const RootSystem& rs) {
    require_classical(rs);
    const int r = rs.rank();
    std::vector<ParabolicSpec> out;
    if (rs.family() == Family::A) {
        const int n = r + 1;
        // Partitions of n in reverse lexicographic order.
        std::vector<int> p{n};
        while (true) {
            out.push_back({partition_label(p), levi_of_partition(p), levi_dim_of(rs, levi_of_partition(p))});
            int rem = 0;
            while (!p.empty() && p.back() == 1) {
                ++rem;
                p.pop_back();
            }
            if (p.empty()) break;
            int k = --p.back();
            ++rem;
            while (rem > k) {
                p.push_back(k);
                rem -= k;
            }
            if (rem > 0) p.push_back(rem);
        }
        return out;
    }
    std::set<std::set<int>> removed_sets;
    if (rs.family() == Family::D) {
        std::vector<std::set<int>> singles;
        for (int d = 1; d <= r - 2; ++d) singles.push_back({d});
        singles.push_back({r - 1, r});
        singles.push_back({r});
        singles.push_back({r - 1});
        for (const auto& s : singles) removed_sets.insert(s);
        for (int d = 1; d <= r - 2; ++d)
            for (const auto& s : singles) {
                if (*s.begin() <= d) continue;
                auto u = s;
                u.insert(d);
                removed_sets.insert(u);
            }
    } else {
        for (int d = 1; d <= r; ++d) {
            removed_sets.insert({d});
            for (int e = d + 1; e <= r; ++e) removed_sets.insert({d, e});
        }
    }
    for (const auto& rem : removed_sets) {
        auto levi = complement(r, rem);
        out.push_back({flag_label(rs, rem), levi, levi_dim_of(rs, levi)});
    }
    return out;
}

std::vector<SphericalPair> enumerate_dim_eq(Family family, int max_rank) {
    if (family != Family::A && family != Family::B && family != Family::C && family != Family::D)
        throw InputError("enumerate_dim_eq: types A-D only");
    if (max_rank > 8) throw InputError("enumerate_dim_eq: max_rank must be at most 8");
    const int lo = min_listed_rank(family);
    if (max_rank < lo) return {};
    std::vector<std::vector<SphericalPair>> per_rank(max_rank - lo + 1);
    parallel_for(per_rank.size(), [&](std::size_t idx) {
        const int rank = lo + static_cast<int>(idx);
        auto rs = RootSystem::build(family, rank);
        std::map<std::pair<std::string, std::string>, std::string> listed;
        for (const auto& p : paper_list(family, rank).pairs) listed[{p.psi.label, p.q.label}] = p.paper_case;
        auto specs = candidate_specs(rs);
        auto& out = per_rank[idx];
        for (const auto& a : specs)
            for (const auto& b : specs) {
                if (a.dim + b.dim != static_cast<int>(rs.num_roots())) continue;
                SphericalPair p{family, rank, a, b, dim_equality(rs, a, b), false, {}};
                auto it = listed.find({a.label, b.label});
                if (it != listed.end()) {
                    p.in_paper_list = true;
                    p.paper_case = it->second;
                }
                out.push_back(std::move(p));
            }
        std::sort(out.begin(), out.end(), [](const SphericalPair& x, const SphericalPair& y) {
            return std::tie(x.psi.label, x.q.label) < std::tie(y.psi.label, y.q.label);
        });
    });
    std::vector<SphericalPair> all;
    for (auto& v : per_rank) all.insert(all.end(), v.begin(), v.end());
    return all;
}

} // namespace euphotic
