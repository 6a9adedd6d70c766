#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kwall/lct.hpp"
#include "test_util.hpp"

using namespace kwall;
using namespace kwall::testutil;

namespace {

FamilyPoint point_with(long n, Rat a, std::vector<std::pair<long, Rat>> entries) {
    std::vector<Rat> ai(n + 4);
    for (auto& [i, c] : entries) ai[i] = c;
    return FamilyPoint(n, std::move(a), std::move(ai));
}

}  // namespace

TEST_CASE("curve profiles on the worked examples") {
    CurveProfile dss = curve_profile(dss_point(3));
    CHECK(dss.case_tag == CurveCase::a_nonzero);
    CHECK(*dss.t == 6);
    CHECK(dss.mult == 7);
    CHECK(dss.sum_mult == 7);

    CurveProfile irred = curve_profile(point_with(3, Rat(0), {{0, Rat(1)}, {6, Rat(1)}}));
    CHECK(irred.case_tag == CurveCase::a_zero_a0_nonzero);
    CHECK(*irred.t == 6);
    CHECK(irred.mult == 1);  // X^6 + 1 is squarefree

    CurveProfile red = curve_profile(point_with(3, Rat(0), {{1, Rat(1)}, {6, Rat(1)}}));
    CHECK(red.case_tag == CurveCase::reducible);
    CHECK(*red.m0 == 0);
    CHECK(*red.t == 6);
    CHECK(red.mult == 1);  // 1 + s^5 is squarefree

    CHECK(curve_profile(point_with(3, Rat(1), {})).case_tag == CurveCase::all_zero);
    CHECK_THROWS_AS(curve_profile(point_with(3, Rat(0), {})), std::domain_error);
}

TEST_CASE("multiplicity sums in the a != 0 case") {
    for (int trial = 0; trial < 150; ++trial) {
        long n = 3 + trial % 3;  // both parities
        FamilyPoint p = rand_family_point(n);
        if (p.a.is_zero() || p.all_ai_zero()) continue;
        CurveProfile pr = curve_profile(p);
        CHECK(pr.sum_mult == *pr.t + 1);
        CHECK(pr.sum_mult <= n + 4);  // t+1 <= n+4 resp. 2l+4
        CHECK(pr.mult <= pr.sum_mult);
        CHECK(pr.mult >= 1);
    }
}

TEST_CASE("thresholds on the worked examples") {
    LctReport dss3 = lct_pair(dss_point(3));
    CHECK(dss3.lct == Rat(9, 14));
    CHECK(dss3.is_dss);
    REQUIRE(dss3.singularity.has_value());
    CHECK(*dss3.singularity == "A6");

    LctReport irr = lct_pair(point_with(3, Rat(0), {{0, Rat(1)}, {6, Rat(1)}}));
    CHECK(irr.lct == Rat(1));
    CHECK_FALSE(irr.is_dss);

    // even-parity distinguished member at l = 1: (l+3)/(2l+4)
    LctReport dss2 = lct_pair(dss_point(2));
    CHECK(dss2.lct == Rat(2, 3));
    CHECK(dss2.is_dss);
    REQUIRE(dss2.along_h.has_value());
    CHECK(*dss2.along_h == Rat(1));
    CHECK(*dss2.singularity == "A5");

    CHECK_THROWS_AS(lct_pair(point_with(3, Rat(1), {})), std::domain_error);
}

TEST_CASE("distinguished-member thresholds across the families") {
    for (long n : {1L, 3L, 5L, 7L}) {
        LctReport r = lct_pair(dss_point(n));
        CHECK(r.lct == Rat(n + 6, 2 * n + 8));
        CHECK(r.is_dss);
        CHECK(*r.singularity == "A" + std::to_string(n + 3));
    }
    for (long l : {1L, 2L, 3L}) {
        LctReport r = lct_pair(dss_point(2 * l));
        CHECK(r.lct == Rat(l + 3, 2 * l + 4));
        CHECK(r.is_dss);
        CHECK(*r.singularity == "A" + std::to_string(2 * l + 3));
    }
}

TEST_CASE("threshold along the orbifold line, even parity") {
    // t < 2l+2 forces the (2l+4-t)/(4l+6-2t) value along H
    long l = 2, n = 2 * l;
    auto p = point_with(n, Rat(1), {{0, Rat(1)}, {l + 2, Rat(1)}});
    LctReport r = lct_pair(p);
    long t = l + 2;
    REQUIRE(r.along_h.has_value());
    CHECK(*r.along_h == Rat(2 * l + 4 - t, 4 * l + 6 - 2 * t));
    CHECK(r.lct <= *r.along_h);

    auto top = point_with(n, Rat(1), {{2 * l + 2, Rat(1)}});
    REQUIRE(lct_pair(top).along_h.has_value());
    CHECK(*lct_pair(top).along_h == Rat(1));
}

TEST_CASE("log canonicity at a given coefficient") {
    FamilyPoint dss = dss_point(3);
    CHECK_FALSE(log_canonical_at(dss, Rat(2, 3)));
    CHECK(log_canonical_at(dss, Rat(121, 204)));
    CHECK(log_canonical_at(dss, Rat(0)));
    CHECK(log_canonical_at(point_with(3, Rat(0), {{0, Rat(1)}, {6, Rat(1)}}), Rat(1)));
}

TEST_CASE("the distinguished member is recognized exactly") {
    for (long n : {1L, 2L, 3L, 4L, 5L}) {
        FamilyPoint dss = dss_point(n);
        // is_dss iff a != 0, t = n+3, mult = n+4
        LctReport r = lct_pair(dss);
        CHECK(r.is_dss);
        CHECK(*r.profile.t == n + 3);
        CHECK(r.profile.mult == n + 4);

        // random torus translates stay recognized, and the returned rescale
        // normalizes the coefficients back to the distinguished vector
        for (int trial = 0; trial < 20; ++trial) {
            Rat s1 = rand_nonzero_rat(4, 4);
            Rat s2 = rand_nonzero_rat(4, 4);
            FamilyPoint moved = apply_torus(dss, s1, s2);
            LctReport rm = lct_pair(moved);
            CHECK(rm.is_dss);
            REQUIRE(rm.dss_rescale.has_value());
            FamilyPoint fixed =
                apply_torus(moved, rm.dss_rescale->first, rm.dss_rescale->second);
            CHECK(fixed.a == dss.a);
            CHECK(fixed.ai == dss.ai);
        }
    }
    // a near-miss: same support, multiplicity broken
    auto near = dss_point(3);
    near.ai[0] += Rat(1, 7);
    CHECK_FALSE(lct_pair(near).is_dss);
}

TEST_CASE("thresholds are invariant under the torus rescalings") {
    for (int trial = 0; trial < 200; ++trial) {
        long n = 1 + trial % 5;
        FamilyPoint p = rand_family_point(n);
        if (p.all_ai_zero()) continue;
        Rat s1 = rand_nonzero_rat(4, 4), s2 = rand_nonzero_rat(4, 4);
        LctReport a = lct_pair(p);
        LctReport b = lct_pair(apply_torus(p, s1, s2));
        CHECK(a.lct == b.lct);
        CHECK(a.profile.mult == b.profile.mult);
        CHECK(a.is_dss == b.is_dss);
    }
}

TEST_CASE("profile multiplicities verified by derivative divisibility") {
    for (int trial = 0; trial < 100; ++trial) {
        long n = trial % 2 ? 3 : 4;
        FamilyPoint p = rand_family_point(n);
        if (p.all_ai_zero()) continue;
        CurveProfile pr = curve_profile(p);
        if (pr.analyzed.degree() < 1) continue;
        for (const auto& f : squarefree_decompose(pr.analyzed)) {
            Poly d = pr.analyzed;
            for (int k = 0; k < f.multiplicity; ++k) {
                CHECK(f.factor.divides(d));
                d = d.derivative();
            }
            CHECK(gcd(f.factor, d).degree() == 0);
            CHECK(f.multiplicity <= pr.mult);
        }
    }
}
