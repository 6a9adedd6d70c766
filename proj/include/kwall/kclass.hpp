#pragma once

// K-stability classification of the family pairs: exact semistable and
// polystable w-sets per coefficient pattern, wall degenerations to the
// monomial members, the replacement pairs at the last wall with their
// normal forms, the hypersurface reduction, and the complexity-one
// verification of the distinguished polystable pairs.

#include "kwall/lct.hpp"
#include "kwall/mpoly.hpp"
#include "kwall/polynomial.hpp"
#include "kwall/vgit.hpp"
#include "kwall/wps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kwall {

// Exact set of coefficient values w.
struct WSet {
    enum class Kind { empty, singleton, interval };
    Kind kind = Kind::empty;
    Rat lo, hi;
    bool lo_closed = false, hi_closed = false;

    static WSet none() { return WSet{}; }
    static WSet singleton(const Rat& x) { return WSet{Kind::singleton, x, x, true, true}; }
    static WSet interval(const Rat& lo, const Rat& hi, bool lo_closed, bool hi_closed) {
        return WSet{Kind::interval, lo, hi, lo_closed, hi_closed};
    }
    bool contains(const Rat& w) const;
    bool empty() const { return kind == Kind::empty; }
};

struct StabilityVerdict {
    WSet semistable;
    WSet polystable;
    std::string table_row;  // "a".."j", "degenerate", "zero"
    std::string notes;
};

// Exact K-(semi/poly)stability domain of the pair attached to p, within
// the open coefficient domain (0, domain_end).
StabilityVerdict kss_domain(const FamilyPoint& p);

enum class KVerdict { unstable, strictly_semistable, polystable, stable };
inline bool is_semistable(KVerdict v) { return v != KVerdict::unstable; }
inline bool is_polystable(KVerdict v) {
    return v == KVerdict::polystable || v == KVerdict::stable;
}
const char* to_string(KVerdict v);

KVerdict classify_at(const FamilyPoint& p, const Rat& w);

enum class PairKind { monomial_de, dss_pair, w0_d0, w0_d1, wprime_h0_d0, wprime_h0_d1 };

struct PolystablePair {
    PairKind kind;
    long n = 1;          // family parameter (even parity: n = 2l)
    long e = 0;          // monomial member index for monomial_de
    std::vector<Rat> b;  // coefficient vector for the d1 kinds
};

PolystablePair monomial_pair(long n, long e);  // checks the legal e-range
PolystablePair dss_pair(long n);
PolystablePair last_wall_replacement(long n);

// Coefficient point of the monomial member D_e.
FamilyPoint monomial_point(long n, long e);

struct WallDegeneration {
    PolystablePair pair;
    OneParamSubgroup lambda;
};

// Monomial degeneration of a stratum member contracted at the given wall,
// with the 1-PS realizing it. Errors "not-contracted-here" otherwise.
WallDegeneration wall_degeneration(const FamilyPoint& p, long wall_index);

// Curve of degree (n+3)^2 on the degeneration surface P(1, n+2, (n+3)^2/2)
// for odd n: c2 x2^2 + x2 sum_j c1[j] x0^* x1^j + sum_j c0[j] x0^* x1^j,
// x0-exponents determined by the degree.
struct W0Curve {
    long n;
    Rat c2;
    std::vector<Rat> c1;  // j = 0 .. floor((n+3)^2 / (2(n+2)))
    std::vector<Rat> c0;  // j = 0 .. n+4
};

W0Curve d1_curve(long n, const std::vector<Rat>& b);  // b = (b_0..b_{n+2}); b may be zero (the d0 member)
// Normal-form coefficients (b_0..b_{n+2}); errors "not-in-D1-family" when
// the genericity of the reduction fails.
std::vector<Rat> d1_normal_form(long n, const W0Curve& curve);

// Stability of the last-wall family member with coefficient vector b.
KVerdict d1_stability(long n, const std::vector<Rat>& b, const Rat& w);

// Hypersurface reduction. f is a quasi-homogeneous degree-2(n+3) MPoly in
// variables x=0, y=1, z=2, t=3 of weights (1, 2, n+2, n+3); even parity
// reads x^2 as the degree-1 coordinate of the orbifold model.
struct HypersurfaceReduction {
    FamilyPoint point;
    Rat scale;    // original t^2 coefficient
    Rat y_scale;  // factor applied to y
    MPoly t_half, y_shift, z_half;  // recorded substitution polynomials
};

HypersurfaceReduction reduce_hypersurface(long n, const MPoly& f);
// Replays the recorded substitutions backwards; returns the input exactly.
MPoly expand_reduction(const HypersurfaceReduction& red);
// z^2 y + a z x^{n+4} + sum a_i x^{2n+6-2i} y^i (no t^2 term).
MPoly family_polynomial(const FamilyPoint& p);

struct BetaEntry {
    std::string divisor;
    Rat degree;  // k with the divisor in |O(k)|
    Rat a_value, s_value, beta;
};

struct ComplexityOneReport {
    std::vector<BetaEntry> vertical;    // all betas must be > 0
    std::vector<BetaEntry> horizontal;  // betas must vanish
    Rat torus_beta;                     // must vanish
    bool ok = false;
};

// Unique w where the torus valuation's beta vanishes (affine in w).
Rat complexity_one_critical_weight(const PolystablePair& config);
ComplexityOneReport verify_complexity_one_polystable(const PolystablePair& config, const Rat& w);

}  // namespace kwall
