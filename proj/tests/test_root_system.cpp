#include "euphotic/errors.hpp"
#include "euphotic/root_system.hpp"
#include "euphotic/weyl_group.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace euphotic;

namespace {

struct TypeCase {
    const char* tag;
    int rank;
    std::size_t roots;
};

const std::vector<TypeCase>& all_cases() {
    static const std::vector<TypeCase> cases = {
        {"A", 1, 2},  {"A", 2, 6},   {"A", 3, 12},  {"A", 5, 30},  {"A", 7, 56},  {"B", 2, 8},
        {"B", 3, 18}, {"B", 5, 50},  {"C", 3, 18},  {"C", 4, 32},  {"D", 4, 24},  {"D", 6, 60},
        {"E", 6, 72}, {"E", 7, 126}, {"E", 8, 240}, {"F", 4, 48},  {"G", 2, 12},
    };
    return cases;
}

RatVec random_point(std::mt19937& gen, int rank, int range = 6) {
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 4);
    RatVec x(rank);
    for (auto& c : x) c = Rat(num(gen), den(gen));
    return x;
}

// Full W-orbit by closure under simple reflections, independent of WeylGroup.
std::set<RatVec> orbit_by_closure(const RootSystem& rs, const RatVec& x) {
    std::set<RatVec> seen{x};
    std::vector<RatVec> frontier{x};
    while (!frontier.empty()) {
        std::vector<RatVec> next;
        for (const auto& y : frontier)
            for (int i = 1; i <= rs.rank(); ++i) {
                RatVec z = rs.reflect_point(i, y);
                if (seen.insert(z).second) next.push_back(z);
            }
        frontier = std::move(next);
    }
    return seen;
}

int edot(const IntVec& a, const IntVec& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

TEST(RootSystem, RootCountsMatchClassicalFormulas) {
    for (const auto& c : all_cases()) {
        auto rs = RootSystem::build(c.tag, c.rank);
        EXPECT_EQ(rs.num_roots(), c.roots) << rs.name();
        EXPECT_EQ(rs.positive_roots().size() * 2, rs.num_roots()) << rs.name();
        for (std::size_t k = 0; k < rs.num_roots(); ++k) {
            EXPECT_EQ(rs.root(rs.negative_of(k)), [&] {
                IntVec n = rs.root(k);
                for (auto& v : n) v = -v;
                return n;
            }());
        }
    }
}

TEST(RootSystem, TagParsing) {
    EXPECT_EQ(RootSystem::build("E8").num_roots(), 240u);
    EXPECT_EQ(RootSystem::build("G2").rank(), 2);
    EXPECT_EQ(RootSystem::build("F", 0).rank(), 4);
    EXPECT_THROW(RootSystem::build("E9"), InputError);
    EXPECT_THROW(RootSystem::build("D", 2), InputError);
    EXPECT_THROW(RootSystem::build("X", 3), InputError);
    EXPECT_THROW(RootSystem::build("B", 0), InputError);
    EXPECT_THROW(RootSystem::build("G3"), InputError);
}

TEST(RootSystem, RootsSortedLexicographically) {
    auto rs = RootSystem::build("F4");
    EXPECT_TRUE(std::is_sorted(rs.roots().begin(), rs.roots().end()));
}

TEST(RootSystem, G2HighestRootAndLongSimple) {
    auto rs = RootSystem::build("G2");
    EXPECT_EQ(rs.highest_root(), (IntVec{2, 3}));
    EXPECT_TRUE(rs.is_long(rs.simple_index(1)));
    EXPECT_FALSE(rs.is_long(rs.simple_index(2)));
    EXPECT_TRUE(rs.index_of({1, 3}).has_value());
    EXPECT_EQ(rs.cartan(0, 1), -1);
    EXPECT_EQ(rs.cartan(1, 0), -3);
}

TEST(RootSystem, HighestRoots) {
    EXPECT_EQ(RootSystem::build("F4").highest_root(), (IntVec{2, 3, 4, 2}));
    EXPECT_EQ(RootSystem::build("E6").highest_root(), (IntVec{1, 2, 2, 3, 2, 1}));
    EXPECT_EQ(RootSystem::build("E7").highest_root(), (IntVec{2, 2, 3, 4, 3, 2, 1}));
    EXPECT_EQ(RootSystem::build("E8").highest_root(), (IntVec{2, 3, 4, 6, 5, 4, 3, 2}));
    EXPECT_EQ(RootSystem::build("B", 3).highest_root(), (IntVec{1, 2, 2}));
    EXPECT_EQ(RootSystem::build("C", 3).highest_root(), (IntVec{2, 2, 1}));
    EXPECT_EQ(RootSystem::build("D", 5).highest_root(), (IntVec{1, 2, 2, 1, 1}));
}

TEST(RootSystem, CartanMatchesClassicalEuclideanRoots) {
    // a_ij = 2 (e_i·e_j) / (e_i·e_i) for the e-coordinate realisation of α_i, α_j.
    for (const auto& c : all_cases()) {
        auto rs = RootSystem::build(c.tag, c.rank);
        if (!rs.is_classical()) continue;
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                IntVec ai = rs.classical_root(rs.simple_index(i + 1));
                IntVec aj = rs.classical_root(rs.simple_index(j + 1));
                EXPECT_EQ(rs.cartan(i, j), 2 * edot(ai, aj) / edot(ai, ai)) << rs.name() << " " << i << j;
            }
    }
}

TEST(RootSystem, ClassicalRootsHaveExpectedShape) {
    auto b = RootSystem::build("B", 3);
    auto c = RootSystem::build("C", 3);
    auto d = RootSystem::build("D", 4);
    std::set<IntVec> bs, cs, ds;
    for (std::size_t k = 0; k < b.num_roots(); ++k) bs.insert(b.classical_root(k));
    for (std::size_t k = 0; k < c.num_roots(); ++k) cs.insert(c.classical_root(k));
    for (std::size_t k = 0; k < d.num_roots(); ++k) ds.insert(d.classical_root(k));
    EXPECT_TRUE(bs.count({1, 0, 0}) && bs.count({1, 1, 0}) && !bs.count({2, 0, 0}));
    EXPECT_TRUE(cs.count({2, 0, 0}) && cs.count({1, -1, 0}) && !cs.count({1, 0, 0}));
    EXPECT_TRUE(ds.count({0, 0, 1, 1}) && ds.count({0, 0, 1, -1}) && !ds.count({0, 0, 0, 1}));
}

TEST(RootSystem, PairingExamples) {
    auto rs = RootSystem::build("G2");
    RatVec x{Rat(1, 5), Rat(1, 5)};
    EXPECT_EQ(rs.pairing(IntVec{1, 1}, x), Rat(2, 5));
    EXPECT_EQ(rs.pairing(rs.highest_root(), x), Rat(1));
    EXPECT_EQ(rs.pairing(IntVec{1, 3}, RatVec(2, Rat(0))), Rat(0));
}

TEST(RootSystem, PairingMatchesEuclideanDotInClassicalCoordinates) {
    std::mt19937 gen(5);
    for (const char* tag : {"A", "B", "C", "D"}) {
        auto rs = RootSystem::build(tag, 4);
        for (int t = 0; t < 10; ++t) {
            RatVec x = random_point(gen, rs.rank());
            RatVec e = rs.to_classical(x);
            EXPECT_EQ(rs.from_classical(e), x);
            for (std::size_t k = 0; k < rs.num_roots(); ++k) {
                IntVec ce = rs.classical_root(k);
                Rat s;
                for (std::size_t i = 0; i < ce.size(); ++i) s += Rat(ce[i]) * e[i];
                EXPECT_EQ(s, rs.pairing(k, x));
            }
        }
    }
}

TEST(RootSystem, ReflectPointG2) {
    auto rs = RootSystem::build("G2");
    RatVec x{Rat(1, 5), Rat(1, 5)};
    RatVec y = rs.reflect_point(1, x);
    // s_1 x = x − ⟨α_1, x⟩ α_1^∨, and α_1^∨ has values (a_11, a_12) = (2, −1).
    EXPECT_EQ(y, (RatVec{Rat(-1, 5), Rat(2, 5)}));
    EXPECT_EQ(rs.reflect_point(1, y), x);
}

TEST(RootSystem, ReflectionsAreInvolutionsAndPreservePairings) {
    std::mt19937 gen(11);
    for (const auto& c : all_cases()) {
        auto rs = RootSystem::build(c.tag, c.rank);
        RatVec x = random_point(gen, rs.rank());
        for (int i = 1; i <= rs.rank(); ++i) {
            RatVec y = rs.reflect_point(i, x);
            EXPECT_EQ(rs.reflect_point(i, y), x);
            EXPECT_EQ(y[i - 1], -x[i - 1]);
            // ⟨s_i β, s_i x⟩ = ⟨β, x⟩.
            for (std::size_t k = 0; k < rs.num_roots(); k += 3)
                EXPECT_EQ(rs.pairing(rs.reflect_root(i, rs.root(k)), y), rs.pairing(k, x));
        }
    }
}

TEST(RootSystem, ReflectionsPermuteRoots) {
    for (const auto& c : all_cases()) {
        auto rs = RootSystem::build(c.tag, c.rank);
        for (int i = 1; i <= rs.rank(); ++i) {
            std::set<IntVec> img;
            for (const auto& r : rs.roots()) img.insert(rs.reflect_root(i, r));
            EXPECT_EQ(img, std::set<IntVec>(rs.roots().begin(), rs.roots().end()));
        }
    }
}

TEST(RootSystem, GeneralReflectionMatchesWord) {
    std::mt19937 gen(3);
    for (const char* tag : {"B3", "C3", "G2", "F4", "D4"}) {
        auto rs = RootSystem::build(tag);
        RatVec x = random_point(gen, rs.rank());
        for (std::size_t k : rs.positive_roots()) {
            Word w = rs.reflection_word(rs.root(k));
            EXPECT_EQ(rs.apply(w, x), rs.reflect_point_by(rs.root(k), x)) << tag;
            EXPECT_EQ(rs.pairing(k, rs.reflect_point_by(rs.root(k), x)), -rs.pairing(k, x));
        }
    }
}

TEST(RootSystem, DominantRepAgainstBruteForceOrbit) {
    std::mt19937 gen(2024);
    const std::vector<std::pair<const char*, int>> types = {{"A", 1}, {"A", 2}, {"A", 3}, {"B", 2},
                                                            {"B", 3}, {"C", 3}, {"G", 2}};
    for (int t = 0; t < 200; ++t) {
        const auto& [tag, rank] = types[t % types.size()];
        auto rs = RootSystem::build(tag, rank);
        RatVec x = random_point(gen, rank);
        auto orbit = orbit_by_closure(rs, x);
        std::vector<RatVec> dom;
        for (const auto& y : orbit)
            if (rs.is_dominant(y)) dom.push_back(y);
        ASSERT_EQ(dom.size(), 1u);
        auto [y, w] = rs.dominant_rep(x);
        EXPECT_EQ(y, dom[0]);
        EXPECT_EQ(rs.apply(w, x), y);
        // W-invariance.
        auto [y2, w2] = rs.dominant_rep(rs.reflect_point(1 + t % rank, x));
        EXPECT_EQ(y2, y);
    }
}

TEST(RootSystem, DominantRepOfReflectedDominant) {
    auto rs = RootSystem::build("B", 3);
    RatVec y{Rat(1), Rat(2), Rat(3)};
    auto [d, w] = rs.dominant_rep(rs.reflect_point(1, y));
    EXPECT_EQ(d, y);
    EXPECT_EQ(w, Word{1});
    auto [d0, w0] = rs.dominant_rep(y);
    EXPECT_TRUE(w0.empty());
}

TEST(RootSystem, MatrixOfWordActsLikeWord) {
    std::mt19937 gen(8);
    auto rs = RootSystem::build("F4");
    for (int t = 0; t < 20; ++t) {
        Word w;
        for (int k = 0; k < 7; ++k) w.push_back(1 + static_cast<int>(gen() % 4));
        RatVec x = random_point(gen, 4);
        IntMatrix m = rs.matrix_of(w);
        RatVec y(4);
        for (int i = 0; i < 4; ++i) y[i] = dot(m[i], x);
        EXPECT_EQ(y, rs.apply(w, x));
    }
}

TEST(RootSystem, LeviData) {
    auto a5 = RootSystem::build("A", 5);
    EXPECT_EQ(levi_data(a5, std::vector<int>{1, 3, 5}).dim, 11);
    RatVec f = a5.from_classical({Rat(1), Rat(1), Rat(1), Rat(1), Rat(-2), Rat(-2)});
    EXPECT_EQ(levi_data(a5, f).dim, 19);
    EXPECT_EQ(levi_data(a5, std::vector<int>{}).dim, 5);
    auto d4 = RootSystem::build("D", 4);
    EXPECT_EQ(levi_data(d4, std::vector<int>{1, 2}).dim, 10);
}

TEST(RootSystem, LeviPlusNilradicalsIsDimG) {
    for (const auto& c : all_cases()) {
        auto rs = RootSystem::build(c.tag, c.rank);
        const int n = rs.rank();
        for (int mask = 0; mask < (1 << n); mask += 1 + (n > 6 ? 7 : 0)) {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) s.push_back(i + 1);
            auto l = levi_data(rs, s);
            EXPECT_EQ(l.dim + static_cast<int>(rs.num_roots() - l.members.size()),
                      static_cast<int>(rs.num_roots()) + n);
        }
    }
}

TEST(WeylGroup, OrdersAndReducedWords) {
    for (const char* tag : {"A1", "A3", "B3", "C4", "D4", "G2", "F4"}) {
        auto rs = RootSystem::build(tag);
        WeylGroup w(rs);
        EXPECT_EQ(w.size(), rs.weyl_order()) << tag;
        const auto& perms = w.root_permutations();
        for (std::size_t k = 0; k < w.size(); k += 1 + w.size() / 200) {
            // Length equals the number of positive roots sent to negative roots.
            int inv = 0;
            for (std::size_t a : rs.positive_roots())
                if (!rs.is_positive(perms[k][a])) ++inv;
            EXPECT_EQ(inv, w.length(k)) << tag;
            IntMatrix m = rs.matrix_of(w.word(k));
            for (int i = 0; i < rs.rank(); ++i)
                for (int j = 0; j < rs.rank(); ++j) EXPECT_EQ(m[i][j], w.entry(k, i, j));
            for (std::size_t a = 0; a < rs.num_roots(); a += 5)
                EXPECT_EQ(rs.root(perms[k][a]), rs.apply_to_root(w.word(k), rs.root(a)));
        }
        EXPECT_EQ(static_cast<std::size_t>(w.length(w.longest())), rs.positive_roots().size());
    }
}

TEST(WeylGroup, WordsAreLexLeastReduced) {
    auto rs = RootSystem::build("A", 3);
    WeylGroup w(rs);
    // Oracle: all words of each length, the lex-least word reaching each element.
    std::map<IntMatrix, Word> best;
    std::vector<Word> level{{}};
    best[rs.matrix_of({})] = {};
    for (int len = 1; len <= 6; ++len) {
        std::vector<Word> next;
        for (const auto& u : level)
            for (int i = 1; i <= 3; ++i) {
                Word v = u;
                v.push_back(i);
                next.push_back(v);
            }
        std::sort(next.begin(), next.end());
        for (const auto& v : next) best.emplace(rs.matrix_of(v), v);
        level = std::move(next);
    }
    ASSERT_EQ(best.size(), 24u);
    for (std::size_t k = 0; k < w.size(); ++k) EXPECT_EQ(w.word(k), best.at(rs.matrix_of(w.word(k))));
}

TEST(WeylGroup, Multiplication) {
    auto rs = RootSystem::build("B", 3);
    WeylGroup w(rs);
    for (std::size_t k = 0; k < w.size(); ++k)
        for (int i = 1; i <= 3; ++i) {
            Word l{i};
            l.insert(l.end(), w.word(k).begin(), w.word(k).end());
            Word r = w.word(k);
            r.push_back(i);
            EXPECT_EQ(rs.matrix_of(w.word(w.left_mul(i, k))), rs.matrix_of(l));
            EXPECT_EQ(rs.matrix_of(w.word(w.right_mul(k, i))), rs.matrix_of(r));
        }
}

TEST(WeylGroup, RefusesAboveCap) {
    auto e7 = RootSystem::build("E7");
    EXPECT_THROW(WeylGroup{e7}, CapabilityError);
}
