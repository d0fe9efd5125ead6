#include "euphotic/errors.hpp"
#include "euphotic/toral_psi.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace euphotic;

namespace {

BlockFunctional regular(const RootSystem& rs) {
    BlockFunctional psi{rs.family(), rs.rank(), {}};
    for (int i = 1; i <= rs.classical_dim(); ++i) psi.blocks.push_back({"+x" + std::to_string(i), {i}});
    return psi;
}

std::set<std::string> symbols(const BlockFunctional& psi) {
    std::set<std::string> out;
    for (const auto& b : psi.blocks) {
        std::string s = b.label;
        if (s == "0") continue;
        if (s[0] == '+' || s[0] == '-') s = s.substr(1);
        out.insert(s);
    }
    return out;
}

} // namespace

TEST(ToralPsi, A5Partition42) {
    auto a5 = RootSystem::build("A5");
    BlockFunctional psi{Family::A, 5, {{"a", {1, 2, 3, 4}}, {"b", {5, 6}}}};
    auto c = centralizer(a5, psi);
    EXPECT_EQ(c.dim_Gpsi, 19);
    EXPECT_EQ(c.phi_psi.members.size(), 14u);
    EXPECT_EQ(c.swan_numerator, 16);
    EXPECT_EQ(swan_direct(a5, psi), swan_prediction(35, 19));
}

TEST(ToralPsi, SiegelIsGLn) {
    for (int n = 2; n <= 6; ++n) {
        for (Family f : {Family::B, Family::C, Family::D}) {
            if (f == Family::D && n < 4) continue;
            auto rs = RootSystem::build(f, n);
            std::vector<int> all;
            for (int i = 1; i <= n; ++i) all.push_back(i);
            BlockFunctional psi{f, n, {{"+a", all}}};
            EXPECT_EQ(centralizer(rs, psi).dim_Gpsi, n * n) << family_name(f) << n;
        }
    }
}

TEST(ToralPsi, RegularIsTorus) {
    for (const char* tag : {"A4", "B3", "C4", "D5"}) {
        auto rs = RootSystem::build(tag);
        auto c = centralizer(rs, regular(rs));
        EXPECT_EQ(c.dim_Gpsi, rs.rank());
        EXPECT_EQ(c.swan_numerator, static_cast<int>(rs.num_roots()));
    }
}

TEST(ToralPsi, SignedBlocksAndZeroBlock) {
    auto c3 = RootSystem::build("C3");
    // (a, −a, 0): ±(e_1 + e_2) and ±2e_3 vanish.
    BlockFunctional psi{Family::C, 3, {{"+a", {1}}, {"\xE2\x88\x92" "a", {2}}, {"0", {3}}}};
    auto c = centralizer(c3, psi);
    std::set<IntVec> got;
    for (auto k : c.phi_psi.members) got.insert(c3.classical_root(k));
    EXPECT_EQ(got, (std::set<IntVec>{{1, 1, 0}, {-1, -1, 0}, {0, 0, 2}, {0, 0, -2}}));
}

TEST(ToralPsi, MalformedBlocks) {
    auto b3 = RootSystem::build("B3");
    EXPECT_THROW(centralizer(b3, {Family::B, 3, {{"+a", {1, 2}}}}), InputError);
    EXPECT_THROW(centralizer(b3, {Family::B, 3, {{"+a", {1, 2}}, {"+a", {3}}}}), InputError);
    EXPECT_THROW(centralizer(b3, {Family::B, 3, {{"+a", {1, 2}}, {"0", {2, 3}}}}), InputError);
    EXPECT_THROW(centralizer(b3, {Family::B, 3, {{"+a", {1, 2}}, {"+", {3}}}}), InputError);
    auto a2 = RootSystem::build("A2");
    EXPECT_THROW(centralizer(a2, {Family::A, 2, {{"a", {1}}, {"-b", {2, 3}}}}), InputError);
    EXPECT_THROW(validate({Family::G, 2, {}}), InputError);
    EXPECT_THROW(swan_graded(3, 16), ConsistencyError);
    EXPECT_EQ(swan_graded(2, 16), 8);
}

TEST(ToralPsi, PsiForLeviMatchesLeviData) {
    for (const char* tag : {"A1", "A3", "A5", "B2", "B4", "C3", "C5", "D4", "D5", "D6"}) {
        auto rs = RootSystem::build(tag);
        const int r = rs.rank();
        for (int mask = 0; mask < (1 << r); ++mask) {
            std::vector<int> S;
            for (int i = 1; i <= r; ++i)
                if (mask >> (i - 1) & 1) S.push_back(i);
            auto c = centralizer(rs, psi_for_levi(rs, S));
            EXPECT_EQ(c.phi_psi.members, levi_data(rs, S).members) << tag << " mask " << mask;
        }
    }
}

TEST(ToralPsi, StructuralEqualsNumericVanishing) {
    std::mt19937 gen(7);
    const std::vector<long long> primes = {1000003, 1000033, 1000037, 1000039, 1000081, 1000099, 1000117, 1000121};
    for (const char* tag : {"A5", "B4", "C4", "D5"}) {
        auto rs = RootSystem::build(tag);
        const int r = rs.rank();
        for (int mask = 0; mask < (1 << r); mask += 3) {
            std::vector<int> S;
            for (int i = 1; i <= r; ++i)
                if (mask >> (i - 1) & 1) S.push_back(i);
            auto psi = psi_for_levi(rs, S);
            auto structural = centralizer(rs, psi).phi_psi.members;
            for (int trial = 0; trial < 10; ++trial) {
                std::map<std::string, Rat> values;
                std::vector<long long> pool = primes;
                std::shuffle(pool.begin(), pool.end(), gen);
                std::size_t p = 0;
                for (const auto& s : symbols(psi)) values[s] = Rat(pool[p++], 1 + trial);
                RatVec x = rs.from_classical(instantiate(psi, values));
                EXPECT_EQ(levi_data(rs, x).members, structural) << tag << " mask " << mask;
            }
        }
    }
}

TEST(ToralPsi, ClosedAndEven) {
    for (const char* tag : {"A4", "B3", "C4", "D4"}) {
        auto rs = RootSystem::build(tag);
        const int r = rs.rank();
        for (int mask = 0; mask < (1 << r); ++mask) {
            std::vector<int> S;
            for (int i = 1; i <= r; ++i)
                if (mask >> (i - 1) & 1) S.push_back(i);
            auto c = centralizer(rs, psi_for_levi(rs, S));
            EXPECT_EQ(c.swan_numerator % 2, 0);
            EXPECT_EQ(c.swan_numerator + static_cast<int>(c.phi_psi.members.size()), static_cast<int>(rs.num_roots()));
            std::set<std::size_t> in(c.phi_psi.members.begin(), c.phi_psi.members.end());
            for (auto a : in)
                for (auto b : in) {
                    IntVec s = rs.root(a);
                    for (std::size_t i = 0; i < s.size(); ++i) s[i] += rs.root(b)[i];
                    if (auto k = rs.index_of(s)) EXPECT_TRUE(in.count(*k));
                }
        }
    }
}
