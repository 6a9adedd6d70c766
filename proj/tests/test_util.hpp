#pragma once

// Shared deterministic generators for the test suites.

#include "kwall/polynomial.hpp"
#include "kwall/vgit.hpp"

#include <random>

namespace kwall::testutil {

inline std::mt19937& rng() {
    static std::mt19937 gen(20240613u);
    return gen;
}

inline long rand_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

inline Rat rand_rat(long max_num = 9, long max_den = 9) {
    long num = rand_int(-max_num, max_num);
    long den = rand_int(1, max_den);
    return Rat(num, den);
}

inline Rat rand_nonzero_rat(long max_num = 9, long max_den = 9) {
    Rat r = rand_rat(max_num, max_den);
    while (r.is_zero()) r = rand_rat(max_num, max_den);
    return r;
}

inline Poly rand_poly(int max_degree, bool nonzero = true) {
    int deg = static_cast<int>(rand_int(0, max_degree));
    std::vector<Rat> c(deg + 1);
    for (auto& x : c) x = rand_rat(5, 4);
    Poly p(std::move(c));
    if (nonzero && p.is_zero()) return Poly(Rat(1));
    return p;
}

// Product of random factors with multiplicities; exercises the gcd chain.
inline Poly rand_structured_poly(int max_total_degree = 12) {
    Poly p(Rat(rand_int(1, 5)));
    int budget = max_total_degree;
    while (budget > 0 && rand_int(0, 3) > 0) {
        int fdeg = static_cast<int>(rand_int(1, 2));
        int mult = static_cast<int>(rand_int(1, 4));
        if (fdeg * mult > budget) break;
        std::vector<Rat> c(fdeg + 1);
        for (auto& x : c) x = rand_rat(4, 3);
        c[fdeg] = rand_nonzero_rat(4, 3);
        p *= Poly(std::move(c)).pow(mult);
        budget -= fdeg * mult;
    }
    return p;
}

// Coefficient point with mixed sparsity.
inline FamilyPoint rand_family_point(long n) {
    Rat a = rand_int(0, 2) == 0 ? rand_rat(5, 3) : Rat(0);
    std::vector<Rat> ai(n + 4);
    for (auto& c : ai)
        if (rand_int(0, 2) == 0) c = rand_rat(5, 3);
    return FamilyPoint(n, a, std::move(ai));
}

}  // namespace kwall::testutil
