#include "euphotic/errors.hpp"
#include "euphotic/spherical.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace euphotic;

namespace {

// Oracle: Levi dimension of a flag stabilizer 0 ⊂ V_{d_1} ⊂ … ⊂ V_{d_k}.
int flag_levi_dim(Family f, int n, const std::vector<int>& flag) {
    int dim = 0, prev = 0;
    for (int d : flag) {
        dim += (d - prev) * (d - prev);
        prev = d;
    }
    const int r = n - prev;
    if (f == Family::D) dim += r * (2 * r - 1);
    else dim += r * (2 * r + 1);
    return dim;
}

int partition_dim(const std::vector<int>& parts) {
    int s = -1;
    for (int p : parts) s += p * p;
    return s;
}

std::set<std::pair<std::string, std::string>> keys(const std::vector<SphericalPair>& v) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& p : v) out.insert({p.psi.label, p.q.label});
    return out;
}

bool contains(const PaperList& l, const std::string& psi, const std::string& q) {
    for (const auto& p : l.pairs)
        if (p.psi.label == psi && p.q.label == q) return true;
    return false;
}

} // namespace

TEST(Spherical, ParseSpecs) {
    auto a5 = RootSystem::build("A5");
    auto s = parse_spec(a5, "(2,4)");
    EXPECT_EQ(s.label, "(4,2)");
    EXPECT_EQ(s.dim, 19);
    EXPECT_EQ(parse_spec(a5, "1^6").dim, 5);
    EXPECT_EQ(parse_spec(a5, "(2^3)").label, "(2,2,2)");
    EXPECT_THROW(parse_spec(a5, "(4,1)"), InputError);
    auto d4 = RootSystem::build("D4");
    EXPECT_EQ(parse_spec(d4, "P_4").label, "P_4+");
    EXPECT_EQ(parse_spec(d4, "P_4-").levi, (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(parse_spec(d4, "P_3").levi, (std::vector<int>{1, 2}));
    EXPECT_EQ(parse_spec(d4, "P_{1,2}").levi, (std::vector<int>{3, 4}));
    EXPECT_THROW(parse_spec(d4, "P_{2,1}"), InputError);
    EXPECT_THROW(parse_spec(d4, "Q_1"), InputError);
    auto b3 = RootSystem::build("B3");
    EXPECT_THROW(parse_spec(b3, "P_3+"), InputError);
    EXPECT_THROW(parse_spec(RootSystem::build("G2"), "P_1"), InputError);
}

TEST(Spherical, LeviDimsMatchFlagOracle) {
    for (Family f : {Family::B, Family::C, Family::D}) {
        for (int n = 4; n <= 7; ++n) {
            auto rs = RootSystem::build(f, n);
            for (int d = 1; d <= n; ++d) {
                if (f == Family::D && d == n - 1) continue;
                EXPECT_EQ(parse_spec(rs, "P_" + std::to_string(d)).dim, flag_levi_dim(f, n, {d}));
                for (int e = d + 1; e <= n; ++e) {
                    if (f == Family::D && e == n - 1) continue;
                    auto s = parse_spec(rs, "P_{" + std::to_string(d) + "," + std::to_string(e) + "}");
                    EXPECT_EQ(s.dim, flag_levi_dim(f, n, {d, e})) << s.label;
                }
            }
        }
    }
}

TEST(Spherical, DimEqualityExamples) {
    auto a5 = RootSystem::build("A5");
    auto r = dim_equality(a5, parse_spec(a5, "4,2"), parse_spec(a5, "2,2,2"));
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.dim_Gpsi, 19);
    EXPECT_EQ(r.dim_LQ, 11);
    EXPECT_EQ(r.num_roots, 30);
    auto b3 = RootSystem::build("B3");
    auto rb = dim_equality(b3, parse_spec(b3, "P_1"), parse_spec(b3, "P_2"));
    EXPECT_TRUE(rb.holds);
    EXPECT_EQ(rb.dim_Gpsi, 11);
    EXPECT_EQ(rb.dim_LQ, 7);
    auto a3 = RootSystem::build("A3");
    auto ra = dim_equality(a3, parse_spec(a3, "2,2"), parse_spec(a3, "2,2"));
    EXPECT_FALSE(ra.holds);
    EXPECT_EQ(ra.dim_Gpsi + ra.dim_LQ, 14);
    auto a1 = RootSystem::build("A1");
    auto r1 = dim_equality(a1, parse_spec(a1, "1,1"), parse_spec(a1, "1,1"));
    EXPECT_TRUE(r1.holds);
    EXPECT_EQ(r1.dim_Gpsi + r1.dim_LQ, 2);
}

TEST(Spherical, ListedPairContents) {
    auto a6 = paper_list(Family::A, 6);
    EXPECT_TRUE(contains(a6, "(3,3,1)", "(4,3)"));
    auto c3 = paper_list(Family::C, 3);
    EXPECT_TRUE(contains(c3, "P_1", "P_2"));
    EXPECT_TRUE(contains(c3, "P_2", "P_1"));
    EXPECT_TRUE(contains(c3, "P_3", "P_3"));
    auto d4 = paper_list(Family::D, 4);
    EXPECT_TRUE(contains(d4, "P_4+", "P_{1,2}"));
    EXPECT_TRUE(contains(d4, "P_1", "P_{2,4+}"));
    EXPECT_TRUE(contains(d4, "P_4-", "P_{1,2}"));
    EXPECT_TRUE(contains(d4, "P_{2,4-}", "P_4+"));
    EXPECT_EQ(d4.pairs.size(), 12u);
    EXPECT_TRUE(contains(paper_list(Family::D, 5), "P_5-", "P_3"));
    EXPECT_TRUE(paper_list(Family::D, 7).pairs.empty());
    EXPECT_FALSE(paper_list(Family::D, 7).note.empty());
    EXPECT_TRUE(paper_list(Family::E, 6).pairs.empty());
    for (int n = 2; n <= 8; ++n) EXPECT_TRUE(contains(paper_list(Family::B, n), "P_" + std::to_string(n), "P_" + std::to_string(n)));
    for (const auto& p : d4.pairs) EXPECT_NE(p.paper_case.find("St03"), std::string::npos);
    EXPECT_EQ(spherical_data_version(), 1);
}

TEST(Spherical, EveryListedPairSatisfiesEquality) {
    int total = 0;
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        for (int rank = 1; rank <= 8; ++rank) {
            for (const auto& p : paper_list(f, rank).pairs) {
                ++total;
                EXPECT_TRUE(p.dims.holds) << p.psi.label << " " << p.q.label << " rank " << rank;
                const int n = f == Family::A ? rank + 1 : rank;
                const int phi = f == Family::A ? n * n - n : f == Family::D ? 2 * n * n - 2 * n : 2 * n * n;
                EXPECT_EQ(p.dims.num_roots, phi);
                if (f == Family::A) {
                    std::vector<int> parts;
                    std::string s = p.psi.label.substr(1, p.psi.label.size() - 2);
                    std::size_t pos = 0;
                    while (pos < s.size()) {
                        std::size_t c = s.find(',', pos);
                        parts.push_back(std::stoi(s.substr(pos, c - pos)));
                        pos = c == std::string::npos ? s.size() : c + 1;
                    }
                    EXPECT_EQ(p.dims.dim_Gpsi, partition_dim(parts));
                }
            }
        }
    }
    EXPECT_GT(total, 40);
}

TEST(Spherical, EnumerationContainsListedPairs) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
        auto all = enumerate_dim_eq(f, 8);
        for (int rank = min_listed_rank(f); rank <= 8; ++rank) {
            std::vector<SphericalPair> at;
            for (const auto& p : all)
                if (p.rank == rank) at.push_back(p);
            auto got = keys(at);
            for (const auto& p : paper_list(f, rank).pairs)
                EXPECT_TRUE(got.count({p.psi.label, p.q.label})) << family_name(f) << rank << " " << p.psi.label;
            int flagged = 0;
            for (const auto& p : at) {
                EXPECT_TRUE(p.dims.holds);
                flagged += p.in_paper_list;
            }
            EXPECT_EQ(flagged, static_cast<int>(paper_list(f, rank).pairs.size()));
        }
    }
}

TEST(Spherical, EnumerationFamilies) {
    auto b = enumerate_dim_eq(Family::B, 6);
    for (int n = 2; n <= 6; ++n) {
        bool found = false;
        for (const auto& p : b)
            found |= p.rank == n && p.psi.label == "P_" + std::to_string(n) && p.q.label == p.psi.label;
        EXPECT_TRUE(found) << n;
    }
    auto d = enumerate_dim_eq(Family::D, 6);
    bool d6 = false;
    for (const auto& p : d) {
        if (p.rank == 6 && p.psi.label == "P_6+" && p.q.label == "P_3") {
            d6 = true;
            EXPECT_EQ(p.dims.dim_Gpsi, 36);
            EXPECT_EQ(p.dims.dim_LQ, 24);
        }
    }
    EXPECT_TRUE(d6);
    auto a = enumerate_dim_eq(Family::A, 1);
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0].psi.label, "(1,1)");
    EXPECT_THROW(enumerate_dim_eq(Family::A, 9), InputError);
}

TEST(Spherical, EqualityIsSymmetric) {
    for (const char* tag : {"A5", "B4", "C4", "D5"}) {
        auto rs = RootSystem::build(tag);
        auto specs = candidate_specs(rs);
        for (const auto& x : specs)
            for (const auto& y : specs) EXPECT_EQ(dim_equality(rs, x, y).holds, dim_equality(rs, y, x).holds);
    }
}
