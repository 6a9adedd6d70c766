#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kwall/vgit.hpp"
#include "test_util.hpp"

using namespace kwall;
using namespace kwall::testutil;

namespace {

FamilyPoint point_with(long n, Rat a, std::vector<std::pair<long, Rat>> entries) {
    std::vector<Rat> ai(n + 4);
    for (auto& [i, c] : entries) ai[i] = c;
    return FamilyPoint(n, std::move(a), std::move(ai));
}

bool on_ray(const Vec2Q& u, long long vx, long long vy) {
    Vec2Q v{Rat(vx), Rat(vy)};
    return cross(u, v).is_zero() && dot(u, v) > Rat(0);
}

// The witness must certify what the verdict claims.
void check_witness(const FamilyPoint& p, const Rat& w, const GitVerdict& v) {
    if (v.semistable && v.polystable) return;
    REQUIRE(v.witness.has_value());
    auto lam = *v.witness;
    for (auto [gd, gb] : support_vectors(p))
        CHECK(lam.d * gd + lam.b * gb >= 0);  // the limit exists
    Rat beta = git_beta(p.n, w, lam);
    if (!v.semistable) CHECK(beta < Rat(0));
    else CHECK(beta == Rat(0));
}

}  // namespace

TEST_CASE("family point bookkeeping") {
    auto p = point_with(3, Rat(0), {{1, Rat(1)}, {6, Rat(2)}});
    CHECK(p.parity() == Parity::odd);
    CHECK(*p.t() == 6);
    CHECK(*p.m0() == 0);
    CHECK_FALSE(p.is_zero());
    CHECK_THROWS_AS(FamilyPoint(3, Rat(0), std::vector<Rat>(5)), std::domain_error);
    CHECK_THROWS_AS(FamilyPoint(0, Rat(0), std::vector<Rat>(4)), std::domain_error);
    CHECK_FALSE(point_with(3, Rat(1), {}).t().has_value());
    CHECK_FALSE(point_with(3, Rat(1), {{2, Rat(1)}}).m0().has_value());
}

TEST_CASE("support cones") {
    auto single = support_cone(point_with(3, Rat(0), {{6, Rat(1)}}));
    CHECK(single.dimension() == 1);
    CHECK(single.contains({Rat(5), Rat(-2)}));
    CHECK_FALSE(single.contains({Rat(5), Rat(2)}));

    auto two = support_cone(point_with(3, Rat(1), {{0, Rat(1)}}));
    CHECK(two.dimension() == 2);
    CHECK(two.contains({Rat(-1), Rat(-1)}));
    CHECK(two.contains({Rat(-1), Rat(-2)}));
    CHECK(two.contains({Rat(-2), Rat(-3)}));
    CHECK(two.strictly_interior({Rat(-2), Rat(-3)}));
    CHECK_FALSE(two.strictly_interior({Rat(-1), Rat(-1)}));

    auto zero = support_cone(point_with(3, Rat(0), {}));
    CHECK(zero.dimension() == 0);
    CHECK(zero.contains({Rat(0), Rat(0)}));
    CHECK_FALSE(zero.contains({Rat(1), Rat(0)}));
}

TEST_CASE("character vector values") {
    Vec2Q u = git_u_vector(3, Rat(5, 12));
    CHECK(u.x == Rat(1, 12));
    CHECK(u.y == Rat(-1, 30));
    CHECK(on_ray(u, 5, -2));  // the ray of v_6

    CHECK(git_u_vector(3, Rat(7, 18)).y == Rat(0));

    Vec2Q ue = git_u_vector(2, Rat(1, 2));
    CHECK(ue.x == Rat(1, 6));
    CHECK(ue.y == Rat(-1, 6));
    CHECK(on_ray(ue, 2, -2));  // the ray of v_{l+2}

    CHECK_THROWS_AS(git_u_vector(3, Rat(0)), std::domain_error);
    CHECK_THROWS_AS(git_u_vector(3, Rat(2, 3)), std::domain_error);
}

TEST_CASE("beta pairings") {
    CHECK(git_beta(3, Rat(5, 12), {2, 5}) == Rat(0));
    CHECK(git_beta(3, Rat(1, 2), {0, -1}) == Rat(2, 15));
    CHECK_THROWS_AS(git_beta(3, Rat(1, 2), {0, 0}), std::domain_error);

    // linear in lambda, affine in w
    for (int i = 0; i < 50; ++i) {
        long n = rand_int(1, 8);
        Rat w(rand_int(1, 9), 24);
        if (!(w < domain_end(n))) continue;
        OneParamSubgroup l1{rand_int(-5, 5), rand_int(-5, 5)};
        OneParamSubgroup l2{rand_int(-5, 5), rand_int(-5, 5)};
        if ((l1.d == 0 && l1.b == 0) || (l2.d == 0 && l2.b == 0)) continue;
        if (l1.d + l2.d == 0 && l1.b + l2.b == 0) continue;
        OneParamSubgroup sum{l1.d + l2.d, l1.b + l2.b};
        CHECK(git_beta(n, w, sum) == git_beta(n, w, l1) + git_beta(n, w, l2));

        // and affine in w: three-point collinearity
        Rat w0(1, 4), w1(1, 3), w2(2, 5);
        if (w2 < domain_end(n)) {
            Rat b0 = git_beta(n, w0, l1), b1 = git_beta(n, w1, l1), b2 = git_beta(n, w2, l1);
            CHECK((b1 - b0) * (w2 - w0) == (b2 - b0) * (w1 - w0));
        }
    }
}

TEST_CASE("cone classification on the worked examples") {
    auto a6 = point_with(3, Rat(0), {{6, Rat(1)}});
    auto v1 = git_classify(a6, Rat(5, 12));
    CHECK(v1.semistable);
    CHECK(v1.polystable);

    auto v2 = git_classify(a6, Rat(1, 2));
    CHECK_FALSE(v2.semistable);
    check_witness(a6, Rat(1, 2), v2);

    auto mixed = point_with(3, Rat(0), {{0, Rat(1)}, {6, Rat(1)}});
    auto v3 = git_classify(mixed, Rat(1, 2));
    CHECK(v3.semistable);
    CHECK(v3.polystable);

    // with both outer blocks occupied the wall point is still polystable
    auto both = point_with(3, Rat(0), {{0, Rat(1)}, {5, Rat(1)}, {6, Rat(1)}});
    auto v4 = git_classify(both, wall_value(3, 1));
    CHECK(v4.semistable);
    CHECK(v4.polystable);

    // on the wall, a point whose support starts at the pinned index sits on
    // a boundary ray: strictly semistable
    auto edge = point_with(3, Rat(0), {{5, Rat(1)}, {6, Rat(1)}});
    auto v5 = git_classify(edge, wall_value(3, 1));
    CHECK(v5.semistable);
    CHECK_FALSE(v5.polystable);
    check_witness(edge, wall_value(3, 1), v5);

    // the zero point is unstable by convention
    auto z = git_classify(point_with(3, Rat(0), {}), Rat(1, 2));
    CHECK_FALSE(z.semistable);
}

TEST_CASE("brute-force oracle on the worked examples") {
    auto a6 = point_with(3, Rat(0), {{6, Rat(1)}});
    for (const Rat& w : {Rat(5, 12), Rat(1, 2)}) {
        auto fast = git_classify(a6, w);
        auto slow = brute_force_git_oracle(a6, w, 20);
        CHECK(fast.semistable == slow.semistable);
        CHECK(fast.polystable == slow.polystable);
    }

    auto zero = brute_force_git_oracle(point_with(3, Rat(0), {}), Rat(1, 2), 5);
    CHECK_FALSE(zero.semistable);

    // a = 1 alone is destabilized everywhere in the domain
    auto a_only = point_with(3, Rat(1), {});
    for (const Rat& w : {Rat(5, 12), Rat(1, 2), Rat(7, 12)}) {
        auto v = brute_force_git_oracle(a_only, w, 20);
        CHECK_FALSE(v.semistable);
        check_witness(a_only, w, v);
    }
}

TEST_CASE("cone classifier agrees with the oracle on random points") {
    for (long n : {3L, 2L}) {
        WallSchedule sched = enumerate_walls(n);
        std::vector<Rat> weights = sched.git_walls();
        weights.push_back((sched.git_walls().back() + sched.xi()) / Rat(2));
        weights.push_back(Rat(1, 5));
        for (int trial = 0; trial < 120; ++trial) {
            FamilyPoint p = rand_family_point(n);
            const Rat& w = weights[trial % weights.size()];
            auto fast = git_classify(p, w);
            auto slow = brute_force_git_oracle(p, w, 30);
            CAPTURE(trial);
            CHECK(fast.semistable == slow.semistable);
            CHECK(fast.polystable == slow.polystable);
            check_witness(p, w, fast);
        }
    }
}

TEST_CASE("wall schedules") {
    WallSchedule s3 = enumerate_walls(3);
    REQUIRE(s3.walls.size() == 4);
    CHECK(s3.walls[0].second == Rat(5, 12));
    CHECK(s3.walls[1].second == Rat(3, 7));
    CHECK(s3.walls[2].second == Rat(11, 24));
    CHECK(s3.walls[3].second == Rat(121, 204));
    CHECK(s3.walls[3].first == "xi");
    CHECK(s3.domain_end == Rat(2, 3));

    WallSchedule s2 = enumerate_walls(2);
    REQUIRE(s2.walls.size() == 4);
    CHECK(s2.walls[0].second == Rat(2, 5));
    CHECK(s2.walls[1].second == Rat(11, 26));
    CHECK(s2.walls[2].second == Rat(1, 2));
    CHECK(s2.walls[3].second == Rat(13, 22));
    CHECK(s2.domain_end == Rat(7, 10));

    WallSchedule s1 = enumerate_walls(1);
    CHECK(s1.walls[0].second == Rat(3, 8));
    CHECK(s1.walls[0].second == wall_value_alt(1, 0));
    CHECK(s1.walls[1].second == wall_value_alt(1, 1));
}

TEST_CASE("the two published wall formulas agree") {
    for (long n = 1; n <= 21; n += 2)
        for (long i = 0; i <= (n + 3) / 2; ++i) CHECK(wall_value(n, i) == wall_value_alt(n, i));
    for (long l = 1; l <= 10; ++l)
        for (long i = 0; i <= l + 1; ++i) CHECK(wall_value(2 * l, i) == wall_value_alt(2 * l, i));
}

TEST_CASE("schedules increase and xi sits in (1/2, end)") {
    for (long n = 1; n <= 21; ++n) {
        WallSchedule s = enumerate_walls(n);  // construction asserts monotonicity
        CHECK(s.xi() > Rat(1, 2));
        CHECK(s.xi() < s.domain_end);
        for (const Rat& w : s.git_walls()) CHECK(w <= Rat(1, 2));
    }
}

TEST_CASE("the character vector crosses the support rays exactly at the walls") {
    for (long n = 1; n <= 21; ++n) {
        for (long i = 0; i <= last_wall_index(n); ++i) {
            Rat wi = wall_value(n, i);
            Vec2Q u = git_u_vector(n, wi);
            CHECK(on_ray(u, n + 2 - i, -2));  // the ray of v_{n+3-i}
            // strictly between adjacent rays inside the chamber above
            Rat next = i < last_wall_index(n) ? wall_value(n, i + 1) : xi_value(n);
            Rat mid = (wi + next) / Rat(2);
            Vec2Q um = git_u_vector(n, mid);
            Vec2Q hi{Rat(n + 2 - i), Rat(-2)}, lo{Rat(n + 1 - i), Rat(-2)};
            CHECK(cross(lo, um) > Rat(0));
            CHECK(cross(um, hi) > Rat(0));
        }
    }
}

TEST_CASE("stratum descriptions") {
    Stratum ch = stratum_description(3, Rat(1, 2));
    CHECK(ch.kind == Stratum::Kind::chamber);
    CHECK(ch.lo == Rat(11, 24));
    CHECK(ch.hi == Rat(121, 204));
    CHECK(ch.lower_end == 3);
    CHECK(ch.upper_start == 4);

    Stratum wall = stratum_description(3, Rat(3, 7));
    CHECK(wall.kind == Stratum::Kind::wall);
    CHECK(wall.index == 1);
    REQUIRE(wall.pinned.has_value());
    CHECK(*wall.pinned == 5);

    Stratum below = stratum_description(3, Rat(1, 3));
    CHECK(below.kind == Stratum::Kind::empty_below);

    Stratum above_xi = stratum_description(3, Rat(5, 8));
    CHECK(above_xi.kind == Stratum::Kind::chamber);
    CHECK(above_xi.lo == Rat(121, 204));
    CHECK(above_xi.lower_end == 3);
}

TEST_CASE("CM degree and ampleness") {
    auto [b1, amp1] = cm_degree(3, Rat(7, 18));
    CHECK(b1 == Rat(0));
    CHECK_FALSE(amp1);
    auto [b2, amp2] = cm_degree(3, Rat(1, 2));
    CHECK(b2 == Rat(2, 15));
    CHECK(amp2);
    auto [b3, amp3] = cm_degree(3, Rat(1, 3));
    CHECK(b3 < Rat(0));
    CHECK_FALSE(amp3);
}

TEST_CASE("torus action and one-parameter limits") {
    auto p = point_with(3, Rat(2), {{0, Rat(1)}, {6, Rat(3)}});
    auto q = apply_torus(p, Rat(2), Rat(1, 3));
    CHECK(q.a == Rat(2) / (Rat(2) * Rat(1, 3)));
    CHECK(q.ai[0] == Rat(1) * Rat(1, 2) * Rat(9));
    CHECK(q.ai[6] == Rat(3) * Rat(32) * Rat(9));
    auto back = apply_torus(q, Rat(1, 2), Rat(3));
    CHECK(back.a == p.a);
    CHECK(back.ai == p.ai);

    // limit of a 1-PS kills positive-pairing coefficients
    auto lim = one_ps_limit(point_with(3, Rat(0), {{5, Rat(1)}, {6, Rat(1)}}), {2, 4});
    REQUIRE(lim.has_value());
    CHECK(lim->ai[5] == Rat(1));
    CHECK(lim->ai[6] == Rat(0));
    // a scales by t^{-d-b}: no limit when d + b > 0
    CHECK_FALSE(one_ps_limit(point_with(3, Rat(1), {}), {1, 1}).has_value());
    auto fixed = one_ps_limit(point_with(3, Rat(1), {}), {1, -1});
    REQUIRE(fixed.has_value());
    CHECK(fixed->a == Rat(1));
}
