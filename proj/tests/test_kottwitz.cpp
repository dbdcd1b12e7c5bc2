#include "shtrace/kottwitz.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace shtrace;

namespace {

KottwitzPoint gl(const RootDatum& G, std::vector<Rational> slopes) { return gl_point(G, RationalCochar(std::move(slopes))); }

Rational h(long long n, long long d) { return Rational(n, d); }

std::set<std::vector<Rational>> as_set(const std::vector<KottwitzPoint>& pts) {
    std::set<std::vector<Rational>> out;
    for (const auto& b : pts) out.insert(b.nu.entries());
    return out;
}

}  // namespace

TEST(BGmu, GL2Minuscule) {
    auto G = RootDatum::GL(2);
    auto pts = enumerate_BGmu(G, Cochar{1, 0});
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_EQ(pts[0], gl(G, {h(1, 2), h(1, 2)}));
    EXPECT_EQ(pts[1], gl(G, {1, 0}));
    EXPECT_EQ(pts[0].kappa, std::vector<long long>{1});
}

TEST(BGmu, Degenerate) {
    auto G = RootDatum::GL(3);
    auto pts = enumerate_BGmu(G, Cochar{0, 0, 0});
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_TRUE(is_basic(G, pts[0]));
}

TEST(BGmu, GL4Minuscule) {
    auto G = RootDatum::GL(4);
    auto pts = enumerate_BGmu(G, Cochar{1, 0, 0, 0});
    std::set<std::vector<Rational>> expected{{h(1, 4), h(1, 4), h(1, 4), h(1, 4)},
                                             {h(1, 3), h(1, 3), h(1, 3), 0},
                                             {h(1, 2), h(1, 2), 0, 0},
                                             {1, 0, 0, 0}};
    EXPECT_EQ(as_set(pts), expected);
}

TEST(BGmu, RejectsNonDominant) {
    EXPECT_THROW(enumerate_BGmu(RootDatum::GL(2), Cochar{0, 1}), std::invalid_argument);
}

TEST(BGmu, MatchesBruteForce) {
    for (int n = 1; n <= 5; ++n) {
        auto G = RootDatum::GL(n);
        std::vector<std::vector<long long>> mus;
        for (int k = 0; k <= n; ++k) {
            std::vector<long long> mu(n, 0);
            for (int i = 0; i < k; ++i) mu[i] = 1;
            mus.push_back(mu);
        }
        if (n >= 2) {
            std::vector<long long> q(n, 0);
            q.front() = 1;
            q.back() = -1;
            mus.push_back(q);
            std::vector<long long> two(n, 0);
            two.front() = 2;
            mus.push_back(two);
        }
        for (const auto& mu : mus) {
            auto pts = enumerate_BGmu(G, Cochar(mu));
            EXPECT_EQ(as_set(pts), oracle::bgmu_bruteforce(mu)) << Cochar(mu).str();
            for (const auto& b : pts) EXPECT_NO_THROW(validate(G, b));
        }
    }
}

TEST(BGmu, BasicIsUniqueMinimum) {
    auto G = RootDatum::GL(4);
    for (const auto& mu : {Cochar{1, 1, 0, 0}, Cochar{2, 1, 0, 0}, Cochar{1, 0, 0, -1}}) {
        auto pts = enumerate_BGmu(G, mu);
        std::vector<KottwitzPoint> basics;
        for (const auto& b : pts)
            if (is_basic(G, b)) basics.push_back(b);
        ASSERT_EQ(basics.size(), 1u);
        for (const auto& b : pts) EXPECT_TRUE(dominance_leq(G, basics[0].nu, b.nu));
    }
}

TEST(BGmu, OtherTypesGrid) {
    // non-GL types: dominant grid points below mu, no integrality refinement
    auto Sp4 = RootDatum::Sp(4);
    auto pts = enumerate_BGmu(Sp4, Cochar{1, 0});
    auto got = as_set(pts);
    for (const auto& v : std::vector<std::vector<Rational>>{{0, 0}, {h(1, 2), h(1, 2)}, {1, 0}})
        EXPECT_TRUE(got.count(v)) << RationalCochar(v).str();
    const long long N = Sp4.coxeter_number();
    for (const auto& b : pts) {
        EXPECT_TRUE(is_dominant(Sp4, b.nu));
        EXPECT_TRUE(dominance_leq(Sp4, b.nu, to_rational(Cochar{1, 0})));
        for (const auto& x : b.nu) EXPECT_TRUE(is_integer(x * N));
    }
    auto SO5 = RootDatum::SO(5);
    auto so = enumerate_BGmu(SO5, Cochar{1, 0});
    for (const auto& b : so) EXPECT_EQ(b.kappa, std::vector<long long>{1});
    EXPECT_TRUE(std::any_of(so.begin(), so.end(), [&](const auto& b) { return is_basic(SO5, b); }));
}

TEST(Basic, Examples) {
    auto G2 = RootDatum::GL(2), G3 = RootDatum::GL(3);
    EXPECT_EQ(basic_element(G2, 1).nu, RationalCochar(std::vector<Rational>{h(1, 2), h(1, 2)}));
    EXPECT_EQ(basic_element(G2, 0).nu, RationalCochar(std::vector<Rational>{0, 0}));
    EXPECT_EQ(basic_element(G3, 2).nu, RationalCochar(std::vector<Rational>{h(2, 3), h(2, 3), h(2, 3)}));
}

TEST(Specializations, Examples) {
    auto G2 = RootDatum::GL(2);
    auto pts2 = enumerate_BGmu(G2, Cochar{1, 0});
    auto sp = specializations(G2, basic_element(G2, 1), pts2, true);
    ASSERT_EQ(sp.size(), 1u);
    EXPECT_EQ(sp[0], gl(G2, {1, 0}));
    EXPECT_TRUE(specializations(G2, gl(G2, {1, 0}), pts2, true).empty());
    EXPECT_EQ(specializations(G2, gl(G2, {1, 0}), pts2, false).size(), 1u);

    auto G4 = RootDatum::GL(4);
    auto pts4 = enumerate_BGmu(G4, Cochar{1, 0, 0, 0});
    auto s4 = specializations(G4, gl(G4, {h(1, 2), h(1, 2), 0, 0}), pts4, true);
    ASSERT_EQ(s4.size(), 1u);
    EXPECT_EQ(s4[0], gl(G4, {1, 0, 0, 0}));
    auto down = specializations(G4, gl(G4, {h(1, 2), h(1, 2), 0, 0}), pts4, true, Direction::generization);
    EXPECT_EQ(down.size(), 2u);

    EXPECT_THROW(specializations(G2, basic_element(G2, 0), pts2, true), std::invalid_argument);
}

TEST(Levi, Examples) {
    auto G2 = RootDatum::GL(2), G3 = RootDatum::GL(3);
    auto split = Gb_levi_description(G2, gl(G2, {1, 0}));
    ASSERT_EQ(split.size(), 2u);
    EXPECT_TRUE(split[0].split() && split[1].split());
    EXPECT_EQ(split[0].slope, 0);
    auto quat = Gb_levi_description(G2, basic_element(G2, 1));
    ASSERT_EQ(quat.size(), 1u);
    EXPECT_FALSE(quat[0].split());
    EXPECT_EQ(quat[0].division_degree, 2);
    auto b3 = Gb_levi_description(G3, gl(G3, {1, 0, 0}));
    ASSERT_EQ(b3.size(), 2u);
    std::multiset<int> sizes{b3[0].size, b3[1].size};
    EXPECT_EQ(sizes, (std::multiset<int>{1, 2}));
}

TEST(Validate, Invariants) {
    auto G2 = RootDatum::GL(2);
    EXPECT_THROW(gl(G2, {h(1, 3), h(2, 3)}), std::invalid_argument);
    EXPECT_THROW(validate(G2, KottwitzPoint{RationalCochar(std::vector<Rational>{1, 0}), {2}}), std::invalid_argument);
}

TEST(Hasse, CoverRelation) {
    auto G = RootDatum::GL(4);
    auto pts = enumerate_BGmu(G, Cochar{1, 0, 0, 0});
    auto edges = hasse_edges(G, pts);
    EXPECT_EQ(edges.size(), 3u);  // a chain of four points
    auto dot = hasse_dot(G, pts);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("basic"), std::string::npos);
}
