#include "shtrace/weights.hpp"

#include <gtest/gtest.h>

using namespace shtrace;

namespace {

// All dominant mu for GL_n with <mu, highest coroot> = mu_1 - mu_n <= bound,
// normalized by mu_n = 0.
std::vector<Cochar> dominant_up_to(int n, long long bound) {
    std::vector<Cochar> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long hi) -> void {
        if (static_cast<int>(cur.size()) == n - 1) {
            auto v = cur;
            v.push_back(0);
            out.emplace_back(v);
            return;
        }
        for (long long x = hi; x >= 0; --x) {
            cur.push_back(x);
            self(self, x);
            cur.pop_back();
        }
    };
    rec(rec, bound);
    return out;
}

}  // namespace

TEST(Freudenthal, Examples) {
    auto G2 = RootDatum::GL(2), G3 = RootDatum::GL(3);
    auto t = freudenthal(G2, Cochar{1, 0});
    EXPECT_EQ(t.entries().size(), 1u);
    EXPECT_EQ(t.multiplicity(G2, Cochar{1, 0}), 1);
    EXPECT_EQ(t.multiplicity(G2, Cochar{0, 1}), 1);
    EXPECT_EQ(freudenthal(G3, Cochar{1, 0, -1}).multiplicity(G3, Cochar{0, 0, 0}), 2);
    EXPECT_EQ(freudenthal(G2, Cochar{2, 0}).multiplicity(G2, Cochar{1, 1}), 1);
    EXPECT_EQ(freudenthal(G2, Cochar{2, 0}).multiplicity(G2, Cochar{2, 1}), 0);
    EXPECT_THROW(freudenthal(G2, Cochar{0, 1}), std::invalid_argument);
}

TEST(Kostant, Examples) {
    auto G2 = RootDatum::GL(2), G3 = RootDatum::GL(3);
    EXPECT_EQ(kostant_oracle(G3, Cochar{2, 1, 0}, Cochar{2, 1, 0}), 1);
    EXPECT_EQ(kostant_oracle(G2, Cochar{2, 0}, Cochar{0, 2}), 1);
    EXPECT_EQ(kostant_oracle(G3, Cochar{1, 0, -1}, Cochar{0, 0, 0}), 2);
    EXPECT_THROW(kostant_oracle(RootDatum::GL(6), Cochar{1, 0, 0, 0, 0, 0}, Cochar{1, 0, 0, 0, 0, 0}),
                 std::invalid_argument);
    EXPECT_THROW(kostant_oracle(G2, Cochar{30, 0}, Cochar{15, 15}), std::invalid_argument);
}

TEST(Dimension, Examples) {
    EXPECT_EQ(weyl_dimension(RootDatum::GL(2), Cochar{1, 0}), 2);
    EXPECT_EQ(weyl_dimension(RootDatum::GL(3), Cochar{1, 0, -1}), 8);
    EXPECT_EQ(weyl_dimension(RootDatum::GL(2), Cochar{2, 0}), 3);
    EXPECT_EQ(weyl_dimension(RootDatum::Sp(4), Cochar{1, 0}), 5);  // dual group SO(5), standard
    EXPECT_EQ(weyl_dimension(RootDatum::SO(5), Cochar{1, 0}), 4);  // dual group Sp(4), standard
}

TEST(Freudenthal, AgreesWithKostantAndDimension) {
    for (int n = 2; n <= 4; ++n) {
        auto G = RootDatum::GL(n);
        for (const auto& mu : dominant_up_to(n, n == 4 ? 3 : 4)) {
            auto table = freudenthal(G, mu);
            Integer total = 0;
            for (const auto& lam : dominant_weights(G, mu)) {
                long long m = table.multiplicity(G, lam);
                EXPECT_EQ(m, kostant_oracle(G, mu, lam)) << mu.str() << " " << lam.str();
                total += Integer(m) * orbit_size(G, lam);
            }
            EXPECT_EQ(total, weyl_dimension(G, mu)) << mu.str();
        }
    }
}

TEST(Freudenthal, OtherTypesSumToDimension) {
    for (const auto& [G, mu] : {std::pair{RootDatum::Sp(4), Cochar{2, 1}}, std::pair{RootDatum::SO(5), Cochar{2, 1}},
                                std::pair{RootDatum::SO(6), Cochar{1, 1, 0}}, std::pair{RootDatum::Sp(6), Cochar{1, 1, 0}}}) {
        auto table = freudenthal(G, mu);
        Integer total = 0;
        for (const auto& [lam, m] : table.entries()) {
            total += Integer(m) * orbit_size(G, lam);
            EXPECT_EQ(m, kostant_oracle(G, mu, lam)) << G.name() << " " << lam.str();
        }
        EXPECT_EQ(total, weyl_dimension(G, mu)) << G.name();
    }
}

TEST(Weights, TableInvariants) {
    auto G = RootDatum::GL(3);
    Cochar mu{3, 1, 0};
    auto table = freudenthal(G, mu);
    EXPECT_EQ(table.multiplicity(G, mu), 1);
    for (const auto& [lam, m] : table.entries()) {
        EXPECT_TRUE(dominance_leq(G, lam, mu));
        EXPECT_EQ(G.kappa(lam), G.kappa(mu));
        for (const auto& w : weyl_group(G)) EXPECT_EQ(table.multiplicity(G, w.apply(lam)), m);
    }
}
