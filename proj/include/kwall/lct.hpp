#pragma once

// Log canonical thresholds of the family curves, by exact multiplicity
// analysis of the residual polynomial after completing the square in the
// chart y = 1. All multiplicities come from gcd chains; no root-finding.

#include "kwall/polynomial.hpp"
#include "kwall/vgit.hpp"

#include <optional>
#include <string>
#include <utility>

namespace kwall {

enum class CurveCase { a_nonzero, a_zero_a0_nonzero, reducible, all_zero };

struct CurveProfile {
    CurveCase case_tag = CurveCase::all_zero;
    std::optional<long> t;
    std::optional<long> m0;   // reducible case only
    long mult = 0;            // the relevant m, m' or m''
    long sum_mult = 0;        // total root count of the analyzed polynomial
    Poly analyzed;            // the one-variable residual the multiplicities live on
};

// Case analysis and multiplicity extraction. Errors with "empty-curve"
// when a and every a_i vanish.
CurveProfile curve_profile(const FamilyPoint& p);

struct LctReport {
    Rat lct;                  // overall threshold (even parity: min with along_h)
    CurveProfile profile;
    std::optional<std::string> singularity;  // worst A_k away from toric points
    bool is_dss = false;
    std::optional<Rat> along_h;              // even parity: threshold along H
    std::optional<std::pair<Rat, Rat>> dss_rescale;  // torus factors normalizing to D_ss
};

LctReport lct_pair(const FamilyPoint& p);

// w <= lct, with the even-parity along-H gate folded into lct.
bool log_canonical_at(const FamilyPoint& p, const Rat& w);

// The distinguished member with the maximal A-singularity:
// a = -2, a_i = (-1)^i C(n+4, i+1) (odd), C(2l+4, i+1) (even).
FamilyPoint dss_point(long n);

}  // namespace kwall
