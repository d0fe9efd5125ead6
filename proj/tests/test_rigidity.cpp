#include "euphotic/errors.hpp"
#include "euphotic/rigidity.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace euphotic;

namespace {

RigidityInputs inputs(int L, int LQ, int Lpsi, int rk, int ginv = 0) {
    RigidityInputs in;
    in.dim_L = L;
    in.dim_LQ = LQ;
    in.dim_Lpsi = Lpsi;
    in.rk_Lpsi = rk;
    in.dim_ginv_pi1 = ginv;
    return in;
}

// Simple-root subsets of {1..r} as vectors.
std::vector<std::vector<int>> subsets(int r) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST(Rigidity, OpenOrbitExamples) {
    // G2: L = SO4, L/Q = P^1, T_psi = B_psi = G_m.
    EXPECT_TRUE(open_orbit_check(inputs(6, 4, 1, 1)));
    // E7, m = 2: L/Q = OG(3,12) of dimension 21, L_psi° = GL6/mu_2.
    EXPECT_TRUE(open_orbit_check(inputs(69, 27, 36, 6)));
    EXPECT_TRUE(open_orbit_check(inputs(5, 5, 0, 0)));
    EXPECT_FALSE(open_orbit_check(inputs(6, 2, 1, 1)));
}

TEST(Rigidity, ParityAndRangeErrors) {
    EXPECT_THROW(open_orbit_check(inputs(6, 3, 1, 1)), InputError);
    EXPECT_THROW(open_orbit_check(inputs(6, 4, 2, 1)), InputError);
    EXPECT_THROW(open_orbit_check(inputs(4, 6, 1, 1)), InputError);
    EXPECT_THROW(open_orbit_check(inputs(6, 4, 1, 2)), InputError);
    EXPECT_THROW(validate(inputs(-1, 0, 0, 0)), InputError);
}

TEST(Rigidity, SumExamples) {
    EXPECT_EQ(rigidity_sum(inputs(6, 4, 1, 1)), 0);
    EXPECT_EQ(rigidity_sum(inputs(0, 0, 0, 0, 3)), 3);
    // Hyperspecial A_{n-1}, psi = (1^n), Q = (1, n-1): dims from the Levi oracle.
    for (int n = 2; n <= 8; ++n) {
        auto rs = RootSystem::build(Family::A, n - 1);
        std::vector<int> q;
        for (int i = 2; i < n; ++i) q.push_back(i);
        const int dim_G = static_cast<int>(rs.num_roots()) + rs.rank();
        RigidityInputs in = inputs(dim_G, levi_data(rs, q).dim, levi_data(rs, std::vector<int>{}).dim, rs.rank());
        EXPECT_EQ(dim_G - in.dim_Lpsi, static_cast<int>(rs.num_roots()));
        EXPECT_EQ(rigidity_sum(in), 0) << n;
        EXPECT_TRUE(open_orbit_check(in));
    }
}

TEST(Rigidity, SumZeroIffOpenOrbit) {
    std::mt19937 gen(7);
    std::uniform_int_distribution<int> d(0, 40);
    int agree_true = 0;
    for (int t = 0; t < 5000; ++t) {
        int L = d(gen), LQ = d(gen), Lpsi = d(gen), rk = d(gen);
        if (LQ > L) std::swap(LQ, L);
        if (rk > Lpsi) std::swap(rk, Lpsi);
        if ((L - LQ) % 2) ++L;
        if ((Lpsi + rk) % 2) ++Lpsi;
        // Bias towards the rigid locus so both outcomes are exercised.
        if (t % 3 == 0) L = LQ + Lpsi + rk;
        RigidityInputs in = inputs(L, LQ, Lpsi, rk);
        const bool open = open_orbit_check(in);
        EXPECT_EQ(rigidity_sum(in) == 0, open);
        agree_true += open;
    }
    EXPECT_GT(agree_true, 1000);
}

TEST(Rigidity, SpringerIdentityAllSubsets) {
    for (const char* tag : {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5", "C6",
                            "D4", "D5", "D6", "G2", "F4", "E6", "E7", "E8"}) {
        auto rs = RootSystem::build(tag);
        for (const auto& s : subsets(rs.rank())) EXPECT_TRUE(springer_identity(rs, s)) << tag;
    }
}

TEST(Rigidity, SpringerIdentityExamples) {
    auto a2 = RootSystem::build("A2");
    EXPECT_EQ(levi_data(a2, std::vector<int>{1, 2}).dim, 8);
    EXPECT_TRUE(springer_identity(a2, {}));
    auto d4 = RootSystem::build("D4");
    EXPECT_EQ(levi_data(d4, std::vector<int>{1, 2}).dim, 10);
    EXPECT_TRUE(springer_identity(d4, {1, 2}));
}
