#pragma once

// Exact Zariski-decomposition profiles of the flag configurations used for
// the local delta bounds, and the bounds themselves. Profiles are stored
// as data (breakpoints and polynomial pieces) normalized to an integral
// polarization class Theta in |O(k)| with -(K+Delta_w) = (c/k) Theta, and
// are validated against the derivative identity vol' = -2 P.E and the
// boundary values vol(0) = Theta^2, vol(tau) = 0.

#include "kwall/piecewise.hpp"
#include "kwall/polynomial.hpp"
#include "kwall/rational.hpp"
#include "kwall/vgit.hpp"

#include <map>
#include <string>

namespace kwall {

enum class FlagPreset {
    special_point_odd,  // weighted blow-up at the A-singularity of the distinguished curve
    special_point_even,
    pz_blowup_odd,  // weighted blow-up at the z-coordinate point
    pz_blowup_even,
    h1_flag,       // the hyperplane x=0 (resp. u=0) itself
    pencil_flag,   // a member of the z-pencil through a general point
};

struct FlagConfig {
    FlagPreset preset;
    long n;  // family parameter; even-parity presets read l = n/2
    Rat w;   // in (1/2, domain_end)

    FlagConfig(FlagPreset preset_, long n_, Rat w_);

    Parity parity() const { return n % 2 ? Parity::odd : Parity::even; }
    long l() const { return n / 2; }

    // deg(-(K + Delta_w)) of the configuration's pair.
    Poly c_in_w() const;
    Rat c_value() const { return c_in_w().eval(w); }
};

struct ZariskiProfile {
    long polar_degree;  // k
    Rat theta_sq;       // Theta^2
    Rat tau;
    PiecewisePoly vol;
    PiecewisePoly p_dot_e;
    std::map<std::string, PiecewisePoly> ord_n_at;  // ord_q(N(t)|_E) per named point
};

ZariskiProfile build_profile(const FlagConfig& cfg);

// S_E / c (a rational constant) and S_E at cfg.w.
Rat s_over_c(const FlagConfig& cfg, const ZariskiProfile& profile);
Rat s_from_profile(const FlagConfig& cfg, const ZariskiProfile& profile);

// Restricted S(W^E; q) via the h(u)-integration; q must be one of the
// preset's named points.
Rat s_restricted_over_c(const FlagConfig& cfg, const ZariskiProfile& profile,
                        const std::string& q);
Rat s_restricted_at(const FlagConfig& cfg, const ZariskiProfile& profile, const std::string& q);

struct AZPointRatio {
    Rat a_value;
    Rat s_value;
};

struct AZReport {
    Rat a_e, s_e;
    std::map<std::string, AZPointRatio> ratios;
    Rat delta_lower_bound;  // min of A_E/S_E and the point ratios
};

AZReport az_delta_bound(const FlagConfig& cfg);

// A_E in w (transcribed log-discrepancy data for the preset).
Poly a_e_in_w(const FlagConfig& cfg);

// Solves A_E(w) = S_E(w); special-point presets only.
Rat solve_critical_weight(const FlagConfig& cfg);

}  // namespace kwall
