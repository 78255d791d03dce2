#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace polyreal;
using th::seq;

namespace {
LatticeElement le(std::initializer_list<std::pair<long, long>> e) {
    LatticeElement a;
    for (auto [j, v] : e) a.add(j, v);
    return a;
}
}  // namespace

TEST(Lattice, ElementBasics) {
    LatticeElement a = le({{3, 2}, {1, 1}});
    EXPECT_EQ(a.get(3), 2);
    EXPECT_EQ(a.get(2), 0);
    EXPECT_EQ(a.max_support(), 3);
    EXPECT_EQ(a.total(), 3);
    a.add(3, -2);
    EXPECT_EQ(a, LatticeElement::unit(1));
    a.set(1, 0);
    EXPECT_TRUE(a.is_zero());
}

TEST(Sigma, Examples) {
    auto s = th::a1_213();
    EXPECT_EQ(sigma(s, LatticeElement::unit(1), 1), 1);
    EXPECT_EQ(sigma(s, LatticeElement::unit(3), 1), -1);
    for (long k = 1; k <= 9; ++k) EXPECT_EQ(sigma(s, LatticeElement{}, k), 0);
}

TEST(Sigma, EpsilonPhiExamples) {
    auto s2 = seq(Family::A1, 2, {1, 2});
    for (int i = 1; i <= 2; ++i) {
        EXPECT_EQ(epsilon(s2, {}, i), 0);
        EXPECT_EQ(phi(s2, {}, i), 0);
    }
    auto a = LatticeElement::unit(2);
    EXPECT_EQ(sigma(s2, a, 1), -2);
    EXPECT_EQ(sigma(s2, a, 3), 0);
    EXPECT_EQ(epsilon(s2, a, 1), 0);
    EXPECT_EQ(weight(s2, a).coeffs, (std::vector<long>{0, 1}));
    EXPECT_EQ(phi(s2, a, 1), 2);
}

TEST(Ftilde, Examples) {
    auto s2 = seq(Family::A1, 2, {1, 2});
    EXPECT_EQ(ftilde(s2, {}, 1), LatticeElement::unit(1));
    EXPECT_EQ(ftilde(s2, {}, 2), LatticeElement::unit(2));
    EXPECT_EQ(ftilde(s2, ftilde(s2, {}, 1), 1), LatticeElement::unit(1, 2));
    EXPECT_EQ(ftilde(s2, ftilde(s2, {}, 2), 1), le({{2, 1}, {3, 1}}));
    auto s = th::a1_213();
    EXPECT_EQ(ftilde(s, {}, 3), LatticeElement::unit(3));
    EXPECT_EQ(ftilde(s, {}, 1), LatticeElement::unit(2));
    EXPECT_EQ(apply_f_word(s2, {1, 1}), LatticeElement::unit(1, 2));
}

TEST(Etilde, Examples) {
    auto s2 = seq(Family::A1, 2, {1, 2});
    for (int i = 1; i <= 2; ++i) {
        EXPECT_FALSE(etilde(s2, {}, i).has_value());
        auto e = etilde(s2, ftilde(s2, {}, i), i);
        ASSERT_TRUE(e.has_value());
        EXPECT_TRUE(e->is_zero());
    }
    EXPECT_FALSE(etilde(s2, LatticeElement::unit(2), 1).has_value());
}

TEST(EnumerateImage, SmallDepths) {
    auto s2 = seq(Family::A1, 2, {1, 2});
    EXPECT_EQ(enumerate_image(s2, 0), (std::set<LatticeElement>{LatticeElement{}}));
    for (int n = 2; n <= 4; ++n) {
        auto s = seq(Family::A1, n, th::default_word(n));
        EXPECT_EQ(enumerate_image(s, 1).size(), static_cast<std::size_t>(n + 1));
    }
    // hand BFS: 0; f1 0 = e1; f2 0 = e2; f1f1 0 = 2e1; f2f1 0 = e1+e2; f1f2 0 = e2+e3; f2f2 0 = 2e2
    std::set<LatticeElement> want{{},
                                  LatticeElement::unit(1),
                                  LatticeElement::unit(2),
                                  LatticeElement::unit(1, 2),
                                  le({{1, 1}, {2, 1}}),
                                  le({{2, 1}, {3, 1}}),
                                  LatticeElement::unit(2, 2)};
    EXPECT_EQ(enumerate_image(s2, 2), want);
    EXPECT_THROW(enumerate_image(s2, -1), DomainError);
    EXPECT_THROW(enumerate_image(s2, 6, 10), ResourceLimitError);
}

TEST(EnumerateImage, AgreesWithDenseOracle) {
    const std::vector<std::tuple<Family, int, std::vector<int>, int>> cases = {
        {Family::A1, 2, {1, 2}, 6},       {Family::A1, 3, {2, 1, 3}, 5}, {Family::C1, 3, {2, 1, 3}, 5},
        {Family::A2, 3, {2, 1, 3}, 5},    {Family::D2, 3, {2, 1, 3}, 5}, {Family::D2, 4, {4, 2, 1, 3}, 4},
        {Family::C1, 3, {2, 1, 3, 2, 3, 1}, 4}};
    for (auto& [f, n, w, depth] : cases) {
        auto s = seq(f, n, w);
        auto oracle = oracle::naive(f, n, w).image(depth);
        std::set<std::map<long, long>> got;
        for (auto& a : enumerate_image(s, depth)) {
            for (auto& [j, v] : a.entries()) EXPECT_GT(v, 0);
            got.insert(a.entries());
        }
        EXPECT_EQ(got, oracle) << to_string(f) << " n=" << n;
    }
}

TEST(Crystal, AxiomsOnImage) {
    for (Family f : {Family::A1, Family::C1, Family::A2, Family::D2}) {
        auto s = seq(f, 3, {2, 1, 3});
        for (const auto& a : enumerate_image(s, 4)) {
            for (int i = 1; i <= 3; ++i) {
                const auto fa = ftilde(s, a, i);
                EXPECT_EQ(phi(s, a, i), epsilon(s, a, i) + pairing(s, i, weight(s, a)));
                auto wf = weight(s, fa).coeffs;
                auto wa = weight(s, a).coeffs;
                wa[i - 1] += 1;
                EXPECT_EQ(wf, wa);
                EXPECT_EQ(epsilon(s, fa, i), epsilon(s, a, i) + 1);
                EXPECT_EQ(phi(s, fa, i), phi(s, a, i) - 1);
                auto back = etilde(s, fa, i);
                ASSERT_TRUE(back.has_value());
                EXPECT_EQ(*back, a);
                if (auto e = etilde(s, a, i)) { EXPECT_EQ(ftilde(s, *e, i), a); }
            }
        }
    }
}
