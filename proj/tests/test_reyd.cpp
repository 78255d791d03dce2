#include <gtest/gtest.h>

#include "golden.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace polyreal;
using th::seq;
using th::x;

namespace {

// y_l = l+2 (l <= -3), y_-2 = 0, y_-1 = y_0 = y_1 = -1, y_2 = y_3 = 0, y_t = 2 (t >= 4)
RevisedEYD example1() { return RevisedEYD(ReydFlavor::A2, 3, 2, -2, {0, -1, -1, -1, 0, 0}); }
// y_l = l+2 (l <= -3), y_-2..y_1 = -1, y_2 = 0, y_3 = y_4 = 1, y_t = 2 (t >= 5)
RevisedEYD example3() { return RevisedEYD(ReydFlavor::A2, 3, 2, -2, {-1, -1, -1, -1, 0, 1, 1}); }

bool has(const std::vector<MarkedPoint>& pts, MarkedPoint p) {
    return std::find(pts.begin(), pts.end(), p) != pts.end();
}

const auto ad = PointRole::admissible;
const auto re = PointRole::removable;
const auto single = Multiplicity::single;
const auto dbl = Multiplicity::double_;

}  // namespace

TEST(Reyd, ConstructionChecks) {
    EXPECT_THROW(RevisedEYD(ReydFlavor::A2, 3, 1), DomainError);
    EXPECT_THROW(RevisedEYD(ReydFlavor::D2target, 3, 3), DomainError);
    EXPECT_THROW(RevisedEYD(ReydFlavor::D2target, 2, 1), RankError);
    RevisedEYD T(ReydFlavor::A2, 3, 2, -3, {-1, 0, 1, 2});
    EXPECT_EQ(T, RevisedEYD(ReydFlavor::A2, 3, 2, 0, {}));
    EXPECT_EQ(T.y(-5), -3);
    EXPECT_EQ(T.y(7), 2);
}

TEST(Reyd, Validate) {
    for (int k = 2; k <= 3; ++k) EXPECT_TRUE(is_valid(RevisedEYD(ReydFlavor::A2, 3, k)));
    EXPECT_TRUE(is_valid(example1()));
    EXPECT_TRUE(is_valid(example3()));
    // jump of 2 at t = 0 where k + t = 2 is not 0 mod 5
    auto v = validate(RevisedEYD(ReydFlavor::A2, 3, 2, 0, {0}));
    EXPECT_NE(std::find(v.begin(), v.end(), ReydViolation{3, 0}), v.end());
}

TEST(Reyd, UnitCountOfPrintedExample) {
    EXPECT_EQ(example3().units(), 13);
    EXPECT_EQ(RevisedEYD(ReydFlavor::A2, 3, 2).units(), 0);
}

TEST(Reyd, ClassifyPrintedExample3) {
    auto pts = classify_points(example3());
    EXPECT_EQ(pts.size(), 7u);
    EXPECT_TRUE(has(pts, {5, 1, re, dbl, 1}));
    EXPECT_TRUE(has(pts, {3, 1, ad, dbl, 1}));
    EXPECT_TRUE(has(pts, {5, 2, ad, single, 2}));
    EXPECT_TRUE(has(pts, {-3, -1, ad, single, 2}));
    EXPECT_TRUE(has(pts, {2, -1, re, single, 3}));
    EXPECT_TRUE(has(pts, {-1, -1, ad, single, 1}));
    EXPECT_TRUE(has(pts, {-1, -1, re, single, 1}));
}

TEST(Reyd, Example3Assignment) {
    auto s = th::a2_213();
    PTable P(s, FoldMap::pi1, 2);
    for (int sv = 1; sv <= 2; ++sv) {
        LinearForm want = x(sv + P(7), 2) + x(sv + P(-1), 2) + x(sv + P(1) + 2, 1) - x(sv + P(3) + 3, 3) -
                          x(sv + P(0) + 1, 1) + 2 * x(sv + P(5) + 1, 1) - 2 * x(sv + P(6) + 1, 1);
        EXPECT_EQ(assign(s, example3(), sv), want);
        EXPECT_EQ(P(5), P(6));
    }
}

TEST(Reyd, Example1LoweringAndClassification) {
    auto T = example1();
    auto pts = classify_points(T);
    EXPECT_TRUE(has(pts, {-2, 0, ad, single, fold(FoldMap::pi1, 3, 0)}));
    auto T2 = toggle_unit(T, {-2, 0, ad, single, 1});
    EXPECT_TRUE(is_valid(T2));
    for (long t = -6; t <= 6; ++t) EXPECT_EQ(T2.y(t), t == -2 ? T.y(t) - 1 : T.y(t));
    EXPECT_EQ(T2.units(), T.units() + 1);
}

TEST(Reyd, EmptyHasSingleMarking) {
    for (int n = 3; n <= 4; ++n) {
        for (int k = 2; k <= n; ++k) {
            auto pts = classify_points(RevisedEYD(ReydFlavor::A2, n, k));
            ASSERT_EQ(pts.size(), 1u);
            EXPECT_EQ(pts[0], (MarkedPoint{0, k, ad, single, k}));
        }
        for (int k = 2; k < n; ++k) {
            auto pts = classify_points(RevisedEYD(ReydFlavor::D2target, n, k));
            ASSERT_EQ(pts.size(), 1u);
            EXPECT_EQ(pts[0], (MarkedPoint{0, k, ad, single, k}));
        }
    }
}

TEST(Reyd, InverseToggles) {
    for (int k = 2; k <= 3; ++k) {
        RevisedEYD phi(ReydFlavor::A2, 3, k);
        auto one = toggle_unit(phi, {0, k, ad, single, k});
        EXPECT_EQ(one.units(), 1);
        EXPECT_TRUE(has(classify_points(one), {1, k - 1, re, single, fold(FoldMap::pi1, 3, k)}));
        EXPECT_EQ(toggle_unit(one, {1, k - 1, re, single, k}), phi);
        EXPECT_THROW(toggle_unit(phi, {3, k, ad, single, 1}), NotASiteError);
    }
}

TEST(Reyd, GoldenA2Forms) {
    auto s = th::a2_213();
    for (auto& g : golden::a2_reyd_forms()) {
        RevisedEYD T(ReydFlavor::A2, 3, g.k, g.t_lo, g.ys);
        ASSERT_TRUE(is_valid(T)) << g.name;
        for (int sv = 1; sv <= 2; ++sv)
            EXPECT_EQ(assign(s, T, sv), golden::materialize(g.form, sv)) << g.name << " s=" << sv;
    }
    // the remark that (-1,0) is admissible in T^2_4
    RevisedEYD t24(ReydFlavor::A2, 3, 2, -1, {0, 0, 1});
    bool found = false;
    for (auto& p : classify_points(t24)) found |= p.x == -1 && p.y == 0 && p.role == ad;
    EXPECT_TRUE(found);
}

TEST(Reyd, FamilyChecks) {
    EXPECT_THROW(assign(th::a1_213(), RevisedEYD(ReydFlavor::A2, 3, 2), 1), FamilyMismatchError);
    EXPECT_THROW(assign(th::a2_213(), RevisedEYD(ReydFlavor::D2target, 3, 2), 1), FamilyMismatchError);
    EXPECT_THROW(assign(seq(Family::A2, 4, {2, 1, 3, 4}), RevisedEYD(ReydFlavor::A2, 3, 2), 1), FamilyMismatchError);
}

TEST(Reyd, EnumerationSmall) {
    RevisedEYD phi(ReydFlavor::A2, 3, 2);
    EXPECT_EQ(enumerate_reyd(ReydFlavor::A2, 3, 2, 0), (std::set<RevisedEYD>{phi}));
    EXPECT_EQ(enumerate_reyd(ReydFlavor::A2, 3, 2, 1),
              (std::set<RevisedEYD>{phi, phi.with_value(0, 1)}));
}

TEST(Reyd, EnumerationAgreesWithBruteForce) {
    struct Case {
        ReydFlavor flavor;
        int n, k, units;
    };
    const Case cases[] = {{ReydFlavor::A2, 3, 2, 4},       {ReydFlavor::A2, 3, 3, 4},
                          {ReydFlavor::A2, 4, 2, 4},       {ReydFlavor::A2, 4, 4, 4},
                          {ReydFlavor::D2target, 3, 2, 4}, {ReydFlavor::D2target, 4, 3, 4}};
    for (auto& c : cases) {
        const bool d2 = c.flavor == ReydFlavor::D2target;
        std::set<RevisedEYD> want;
        for (auto& sh : oracle::reyd_by_units(c.n, c.k, d2, c.units)) {
            RevisedEYD T(c.flavor, c.n, c.k, sh.lo, sh.v);
            want.insert(T);
            // markings agree with the dense membership oracle
            std::set<std::tuple<long, int, bool>> got;
            for (auto& p : classify_points(T)) got.insert({p.x, p.y, p.role == ad});
            EXPECT_EQ(got, sh.markings()) << to_string(c.flavor) << " k=" << c.k;
            EXPECT_EQ(T.units(), sh.units());
        }
        EXPECT_EQ(enumerate_reyd(c.flavor, c.n, c.k, c.units), want) << to_string(c.flavor) << " k=" << c.k;
    }
}

TEST(Reyd, MirrorAndPositivity) {
    for (Family f : {Family::A2, Family::C1}) {
        for (int n = 3; n <= 4; ++n) {
            auto s = seq(f, n, th::default_word(n));
            const ReydFlavor fl = f == Family::A2 ? ReydFlavor::A2 : ReydFlavor::D2target;
            const int khi = fl == ReydFlavor::A2 ? n : n - 1;
            for (int k = 2; k <= khi; ++k) {
                const FoldMap map = fl == ReydFlavor::A2 ? FoldMap::pi1 : FoldMap::pi2;
                PTable P(s, map, k);
                for (const auto& T : enumerate_reyd(fl, n, k, 5)) {
                    for (auto& p : classify_points(T)) {
                        for (int sv = 1; sv <= 2; ++sv) {
                            if (p.role == ad) {
                                EXPECT_GE(reyd_admissible_index(s, P, map, k, sv, p.x, p.y).s, sv);
                                auto U = toggle_unit(T, p);
                                auto back = classify_points(U);
                                bool mirror = false;
                                for (auto& q : back) mirror |= q.role == re && q.x == p.x + 1 && q.y == p.y - 1;
                                EXPECT_TRUE(mirror);
                            } else {
                                EXPECT_GE(reyd_removable_index(s, P, map, k, sv, p.x, p.y).s, sv + 1);
                            }
                        }
                    }
                }
            }
        }
    }
}
