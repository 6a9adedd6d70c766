// Acceptance suite: one line per criterion, every comparison exact.

#include "kwall/azflag.hpp"
#include "kwall/json_io.hpp"
#include "kwall/kclass.hpp"
#include "kwall/lct.hpp"
#include "kwall/vgit.hpp"
#include "kwall/wps.hpp"
#include "test_util.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using namespace kwall;
using namespace kwall::testutil;

namespace {

int g_failures = 0;

void criterion(int idx, const std::string& what, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << idx << ": " << what << " [" << ms
              << " ms]" << note << "\n";
    if (!ok) ++g_failures;
}

std::vector<Rat> sweep_weights(long n) {
    WallSchedule sched = enumerate_walls(n);
    auto walls = sched.git_walls();
    std::vector<Rat> ws = walls;                    // every wall
    ws.push_back(walls[0] / Rat(2));                // the empty range below w0
    for (size_t i = 0; i + 1 < walls.size(); ++i)   // one per chamber
        ws.push_back((walls[i] + walls[i + 1]) / Rat(2));
    ws.push_back((walls.back() + sched.xi()) / Rat(2));  // the last chamber below xi
    return ws;
}

FamilyPoint rand_stratum_member(long n, long i, bool from_above) {
    long e = n + 3 - i;
    std::vector<Rat> ai(n + 4);
    Rat a(0);
    ai[e] = rand_nonzero_rat(5, 3);
    if (from_above) {
        if (rand_int(0, 1)) a = rand_nonzero_rat(5, 3);
        for (long j = 0; j < e; ++j)
            if (rand_int(0, 2) == 0) ai[j] = rand_rat(5, 3);
        bool lower = !a.is_zero();
        for (long j = 0; j < e; ++j) lower = lower || !ai[j].is_zero();
        if (!lower) ai[rand_int(0, e - 1)] = rand_nonzero_rat(5, 3);
    } else {
        for (long j = e + 1; j <= n + 3; ++j)
            if (rand_int(0, 2) == 0) ai[j] = rand_rat(5, 3);
        bool upper = false;
        for (long j = e + 1; j <= n + 3; ++j) upper = upper || !ai[j].is_zero();
        if (!upper) ai[rand_int(e + 1, n + 3)] = rand_nonzero_rat(5, 3);
    }
    return FamilyPoint(n, a, std::move(ai));
}

std::vector<MPoly::Exp> hypersurface_monomials(long n) {
    std::vector<MPoly::Exp> out;
    long target = 2 * n + 6;
    for (int dt = 0; dt <= 2; ++dt)
        for (int dz = 0; dz <= 2; ++dz)
            for (int dy = 0; 2 * dy + (n + 2) * dz + (n + 3) * dt <= target; ++dy)
                out.push_back({static_cast<int>(target - 2 * dy - (n + 2) * dz - (n + 3) * dt),
                               dy, dz, dt});
    return out;
}

MPoly rand_hypersurface(long n) {
    MPoly f = MPoly::term(Rat(1) + rand_rat(3, 2).abs(), {0, 0, 0, 2});
    MPoly::Exp z2y{0, 1, 2, 0};
    f += MPoly::term(rand_nonzero_rat(4, 3), z2y);
    for (const auto& e : hypersurface_monomials(n)) {
        if (e == MPoly::Exp{0, 0, 0, 2} || e == z2y) continue;
        if (rand_int(0, 2) == 0) f += MPoly::term(rand_rat(4, 3), e);
    }
    return f;
}

}  // namespace

int main() {
    criterion(1, "wall schedule for n=3 is {5/12, 3/7, 11/24}, xi=121/204, end 2/3", [] {
        WallSchedule s = enumerate_walls(3);
        return s.walls.size() == 4 && s.walls[0].second == Rat(5, 12) &&
               s.walls[1].second == Rat(3, 7) && s.walls[2].second == Rat(11, 24) &&
               s.walls[3].second == Rat(121, 204) && s.domain_end == Rat(2, 3);
    });

    criterion(2, "wall schedule for n=2 is {2/5, 11/26, 1/2}, xi=13/22, end 7/10", [] {
        WallSchedule s = enumerate_walls(2);
        return s.walls.size() == 4 && s.walls[0].second == Rat(2, 5) &&
               s.walls[1].second == Rat(11, 26) && s.walls[2].second == Rat(1, 2) &&
               s.walls[3].second == Rat(13, 22) && s.domain_end == Rat(7, 10);
    });

    criterion(3, "both wall formulas agree for odd n <= 21; schedules increase; xi in (1/2, end)",
              [] {
                  for (long n = 1; n <= 21; n += 2) {
                      for (long i = 0; i <= (n + 3) / 2; ++i)
                          if (wall_value(n, i) != wall_value_alt(n, i)) return false;
                      WallSchedule s = enumerate_walls(n);  // throws if not increasing
                      if (!(s.xi() > Rat(1, 2)) || !(s.xi() < s.domain_end)) return false;
                  }
                  return true;
              });

    criterion(4, "lct of the distinguished member: (n+6)/(2n+8) odd, (l+3)/(2l+4) even", [] {
        for (long n : {1L, 3L, 5L, 7L}) {
            LctReport r = lct_pair(dss_point(n));
            if (r.lct != Rat(n + 6, 2 * n + 8) || !r.is_dss) return false;
            if (!r.singularity || *r.singularity != "A" + std::to_string(n + 3)) return false;
        }
        for (long l : {1L, 2L, 3L}) {
            LctReport r = lct_pair(dss_point(2 * l));
            if (r.lct != Rat(l + 3, 2 * l + 4) || !r.is_dss) return false;
            if (!r.singularity || *r.singularity != "A" + std::to_string(2 * l + 3)) return false;
        }
        return true;
    });

    criterion(5, "GIT/K agreement: per-chamber and per-wall sweep, 500 random points per n", [] {
        for (long n : {1L, 3L, 5L, 2L, 4L}) {
            std::vector<Rat> weights = sweep_weights(n);
            for (int trial = 0; trial < 500; ++trial) {
                FamilyPoint p = rand_family_point(n);
                for (const Rat& w : weights) {
                    GitVerdict g = git_classify(p, w);
                    KVerdict k = classify_at(p, w);
                    if (g.semistable != is_semistable(k) || g.polystable != is_polystable(k))
                        return false;
                }
            }
        }
        return true;
    });

    criterion(6, "brute-force GIT oracle (N=30) matches the cone classifier, 1000 pairs per parity",
              [] {
                  for (long n : {3L, 2L}) {
                      WallSchedule sched = enumerate_walls(n);
                      auto walls = sched.git_walls();
                      for (int trial = 0; trial < 1000; ++trial) {
                          FamilyPoint p = rand_family_point(n);
                          Rat w;
                          if (trial % 3 == 0) {
                              w = walls[rand_int(0, walls.size() - 1)];
                          } else {
                              // random rational in (0, end)
                              long den = rand_int(5, 60);
                              long num = rand_int(1, den - 1);
                              w = Rat(num, den) * sched.domain_end;
                              if (w.is_zero() || !(w < sched.domain_end)) continue;
                          }
                          GitVerdict fast = git_classify(p, w);
                          GitVerdict slow = brute_force_git_oracle(p, w, 30);
                          if (fast.semistable != slow.semistable ||
                              fast.polystable != slow.polystable)
                              return false;
                      }
                  }
                  return true;
              });

    criterion(7, "flag S-invariants symbolic in w; critical weights equal xi; delta = 1 at xi", [] {
        for (long n : {1L, 3L, 5L, 7L}) {
            FlagConfig cfg(FlagPreset::special_point_odd, n, Rat(1, 2));
            if (s_over_c(cfg, build_profile(cfg)) !=
                Rat(2 * n * n + 12 * n + 17, 3 * (n + 2) * (n + 3)))
                return false;
        }
        for (long n = 1; n <= 21; n += 2) {
            FlagConfig cfg(FlagPreset::special_point_odd, n, Rat(1, 2));
            if (solve_critical_weight(cfg) != xi_value(n)) return false;
        }
        for (long l = 1; l <= 10; ++l) {
            FlagConfig cfg(FlagPreset::special_point_even, 2 * l, Rat(1, 2));
            if (solve_critical_weight(cfg) != xi_value(2 * l)) return false;
        }
        for (long n : {3L, 2L}) {
            FlagConfig at_xi(n % 2 ? FlagPreset::special_point_odd
                                   : FlagPreset::special_point_even,
                             n, xi_value(n));
            if (az_delta_bound(at_xi).delta_lower_bound != Rat(1)) return false;
        }
        return true;
    });

    criterion(8, "complexity-one verification across the legal monomial range and at xi", [] {
        auto passes = [](const PolystablePair& pair) {
            Rat wc = complexity_one_critical_weight(pair);
            ComplexityOneReport rep = verify_complexity_one_polystable(pair, wc);
            if (!rep.ok || !rep.torus_beta.is_zero()) return false;
            for (const auto& e : rep.vertical)
                if (!(e.beta > Rat(0))) return false;
            for (const auto& e : rep.horizontal)
                if (!e.beta.is_zero()) return false;
            return true;
        };
        for (long n : {3L, 5L})
            for (long e = (n + 3) / 2; e <= n + 3; ++e)
                if (!passes(monomial_pair(n, e))) return false;
        for (long l : {1L, 2L})
            for (long e = l + 2; e <= 2 * l + 3; ++e)
                if (!passes(monomial_pair(2 * l, e))) return false;
        for (long n : {3L, 5L})
            if (!passes(last_wall_replacement(n))) return false;
        for (long l : {1L, 2L})
            if (!passes(last_wall_replacement(2 * l))) return false;
        return true;
    });

    criterion(9, "1-PS limits of 100 random stratum members per wall equal the monomial member",
              [] {
                  for (long n : {3L, 2L}) {
                      for (long i = 0; i <= last_wall_index(n); ++i) {
                          for (int trial = 0; trial < 100; ++trial) {
                              bool above = i == 0 || trial % 2 == 0;
                              FamilyPoint p = rand_stratum_member(n, i, above);
                              WallDegeneration deg = wall_degeneration(p, i);
                              auto lim = one_ps_limit(p, deg.lambda);
                              if (!lim || !lim->a.is_zero()) return false;
                              for (long j = 0; j <= n + 3; ++j)
                                  if (lim->ai[j] != (j == deg.pair.e ? p.ai[j] : Rat(0)))
                                      return false;
                          }
                      }
                  }
                  return true;
              });

    criterion(10, "h0 bridge: 13 sections on both sides of the last-wall degeneration at n=3", [] {
        return h0_count(WPPlane(1, 2, 5), 12) == 13 && h0_count(WPPlane(1, 5, 18), 36) == 13 &&
               Rat(3 * 3 + 17, 2) == Rat(13);
    });

    criterion(11, "hypersurface reduction round-trips on 100 random generic inputs per parity",
              [] {
                  for (long n : {3L, 2L}) {
                      for (int trial = 0; trial < 100; ++trial) {
                          MPoly f = rand_hypersurface(n);
                          HypersurfaceReduction red = reduce_hypersurface(n, f);
                          if (expand_reduction(red) != f) return false;
                      }
                  }
                  return true;
              });

    if (g_failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << g_failures << " criteria failed\n";
    return 1;
}
