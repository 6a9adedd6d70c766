#include "kwall/azflag.hpp"

#include <stdexcept>
#include <vector>

namespace kwall {

namespace {

bool preset_is_even(FlagPreset p, long n) {
    switch (p) {
        case FlagPreset::special_point_odd:
        case FlagPreset::pz_blowup_odd: return false;
        case FlagPreset::special_point_even:
        case FlagPreset::pz_blowup_even: return true;
        case FlagPreset::h1_flag:
        case FlagPreset::pencil_flag: return n % 2 == 0;
    }
    return false;
}

Poly affine(const Rat& c0, const Rat& c1) { return Poly({c0, c1}); }

// Named points with a transcribed log discrepancy A_{E,Phi} (affine in w)
// and a flag for whether the negative part contributes at the point.
struct NamedPoint {
    std::string label;
    Poly a;
    bool on_negative_part;
};

std::vector<NamedPoint> named_points(const FlagConfig& cfg) {
    switch (cfg.preset) {
        case FlagPreset::special_point_odd:
            return {{"exceptional-orbifold-point", Poly(Rat(1, 2)), false},
                    {"curve-contact", affine(Rat(1), Rat(-1)), false},
                    {"m-contact", Poly(Rat(1, cfg.n + 4)), true},
                    {"generic", Poly(Rat(1)), false}};
        case FlagPreset::special_point_even:
            // the branch curve passes through the contact point with M
            return {{"m-contact", affine(Rat(1), Rat(-1)), true},
                    {"curve-contact", affine(Rat(1), Rat(-1)), false},
                    {"axis-contact", Poly(Rat(1, cfg.l() + 2)), false},
                    {"generic", Poly(Rat(1)), false}};
        case FlagPreset::pz_blowup_odd:
        case FlagPreset::pz_blowup_even:
            return {{"h1-contact", Poly(Rat(1, 2)), false},
                    {"curve-contact", affine(Rat(1), Rat(-1)), false},
                    {"generic", Poly(Rat(1)), false}};
        case FlagPreset::h1_flag: return {};
        case FlagPreset::pencil_flag:
            return {{"curve-contact", affine(Rat(1), Rat(-1)), false},
                    {"generic", Poly(Rat(1)), false}};
    }
    return {};
}

void validate_profile(const ZariskiProfile& pr) {
    if (pr.vol.eval(Rat(0)) != pr.theta_sq)
        throw std::logic_error("profile: vol(0) != Theta^2");
    if (!pr.vol.eval(pr.tau).is_zero()) throw std::logic_error("profile: vol(tau) != 0");
    if (pr.vol.piece_count() != pr.p_dot_e.piece_count())
        throw std::logic_error("profile: piece mismatch");
    for (size_t i = 0; i < pr.vol.piece_count(); ++i)
        if (pr.vol.piece(i).derivative() != Rat(-2) * pr.p_dot_e.piece(i))
            throw std::logic_error("profile: vol' != -2 P.E");
}

}  // namespace

FlagConfig::FlagConfig(FlagPreset preset_, long n_, Rat w_)
    : preset(preset_), n(n_), w(std::move(w_)) {
    if (n < 1) throw std::domain_error("n must be a positive integer");
    if (preset_is_even(preset, n) != (n % 2 == 0))
        throw std::domain_error("preset parity does not match n");
    if (!(w >= Rat(1, 2)) || !(w < domain_end(n)))
        throw std::domain_error("w outside [1/2, domain end)");
}

Poly FlagConfig::c_in_w() const {
    if (n % 2) return affine(Rat(n + 5), Rat(-(2 * n + 6)));
    return affine(Rat(l() + 3) - Rat(1, 2), Rat(-(2 * l() + 3)));
}

Poly a_e_in_w(const FlagConfig& cfg) {
    long n = cfg.n, l = cfg.l();
    switch (cfg.preset) {
        case FlagPreset::special_point_odd: return affine(Rat(n + 6), Rat(-(2 * n + 8)));
        case FlagPreset::special_point_even: return affine(Rat(l + 3), Rat(-(2 * l + 4)));
        case FlagPreset::pz_blowup_odd:
            return affine(Rat(3, n + 2), Rat(-2, n + 2));
        case FlagPreset::pz_blowup_even:
            return affine(Rat(3, 2 * l + 2), Rat(-2, 2 * l + 2));
        case FlagPreset::h1_flag:
            return Poly(n % 2 ? Rat(1) : Rat(1, 2));
        case FlagPreset::pencil_flag: return Poly(Rat(1));
    }
    throw std::domain_error("unknown preset");
}

ZariskiProfile build_profile(const FlagConfig& cfg) {
    long n = cfg.n, l = cfg.l();
    ZariskiProfile pr;
    const Poly t = Poly::variable();

    switch (cfg.preset) {
        case FlagPreset::special_point_odd: {
            // blow-up weights (2, n+4); M in |O(n+2)| with ord_E(M) = n+3
            Rat tstar = Rat((n + 2) * (n + 4), n + 3);
            pr.polar_degree = n + 2;
            pr.theta_sq = Rat(n + 2, 2);
            pr.tau = Rat(n + 3);
            Poly vol1 = Poly(Rat(n + 2, 2)) - Rat(1, 2 * n + 8) * t * t;
            Poly lin = Poly(Rat(n + 3)) - t;  // n+3 - t
            Poly vol2 = Rat(n + 2, 2) * lin * lin;
            pr.vol = PiecewisePoly({Rat(0), tstar, pr.tau}, {vol1, vol2});
            pr.p_dot_e = PiecewisePoly({Rat(0), tstar, pr.tau},
                                       {Rat(1, 2 * n + 8) * t, Rat(n + 2, 2) * lin});
            Poly ord2 = Rat(n + 3, 2 * n + 8) * (Poly(Rat(1)) - Rat(n + 3) * lin);
            pr.ord_n_at.emplace("m-contact",
                                PiecewisePoly({Rat(0), tstar, pr.tau}, {Poly(), ord2}));
            break;
        }
        case FlagPreset::special_point_even: {
            // blow-up weights (1, l+2); M in |O(l+1)| with ord_E(M) = l+2
            Rat tstar = Rat(l + 1);
            pr.polar_degree = l + 1;
            pr.theta_sq = Rat(l + 1);
            pr.tau = Rat(l + 2);
            Poly vol1 = Poly(Rat(l + 1)) - Rat(1, l + 2) * t * t;
            Poly lin = Poly(Rat(l + 2)) - t;
            Poly vol2 = Rat(l + 1, l + 2) * lin * lin;
            pr.vol = PiecewisePoly({Rat(0), tstar, pr.tau}, {vol1, vol2});
            pr.p_dot_e = PiecewisePoly({Rat(0), tstar, pr.tau},
                                       {Rat(1, l + 2) * t, Rat(l + 1, l + 2) * lin});
            Poly ord2 = Poly(Rat(1)) - lin;  // t - (l+1)
            pr.ord_n_at.emplace("m-contact",
                                PiecewisePoly({Rat(0), tstar, pr.tau}, {Poly(), ord2}));
            break;
        }
        case FlagPreset::pz_blowup_odd: {
            // blow-up of the 1/(n+2)(1,2) point with weights (1,2)/(n+2);
            // E^2 = -(n+2)/2, no negative part.
            pr.polar_degree = 1;
            pr.theta_sq = Rat(1, 2 * n + 4);
            pr.tau = Rat(1, n + 2);
            Poly vol1 = Poly(pr.theta_sq) - Rat(n + 2, 2) * t * t;
            pr.vol = PiecewisePoly({Rat(0), pr.tau}, {vol1});
            pr.p_dot_e = PiecewisePoly({Rat(0), pr.tau}, {Rat(n + 2, 2) * t});
            break;
        }
        case FlagPreset::pz_blowup_even: {
            // blow-up of the 1/(l+1)(1,1) point; E^2 = -(l+1).
            pr.polar_degree = 1;
            pr.theta_sq = Rat(1, l + 1);
            pr.tau = Rat(1, l + 1);
            Poly vol1 = Poly(pr.theta_sq) - Rat(l + 1) * t * t;
            pr.vol = PiecewisePoly({Rat(0), pr.tau}, {vol1});
            pr.p_dot_e = PiecewisePoly({Rat(0), pr.tau}, {Rat(l + 1) * t});
            break;
        }
        case FlagPreset::h1_flag: {
            pr.polar_degree = 1;
            pr.theta_sq = n % 2 ? Rat(1, 2 * n + 4) : Rat(1, l + 1);
            pr.tau = Rat(1);
            Poly lin = Poly(Rat(1)) - t;
            pr.vol = PiecewisePoly({Rat(0), Rat(1)}, {pr.theta_sq * lin * lin});
            pr.p_dot_e = PiecewisePoly({Rat(0), Rat(1)}, {pr.theta_sq * lin});
            break;
        }
        case FlagPreset::pencil_flag: {
            long k = n % 2 ? n + 2 : l + 1;  // wt(z)
            pr.polar_degree = k;
            pr.theta_sq = n % 2 ? Rat(n + 2, 2) : Rat(l + 1);
            pr.tau = Rat(1);
            Poly lin = Poly(Rat(1)) - t;
            pr.vol = PiecewisePoly({Rat(0), Rat(1)}, {pr.theta_sq * lin * lin});
            pr.p_dot_e = PiecewisePoly({Rat(0), Rat(1)}, {pr.theta_sq * lin});
            break;
        }
    }
    validate_profile(pr);
    return pr;
}

Rat s_over_c(const FlagConfig& cfg, const ZariskiProfile& pr) {
    (void)cfg;
    return pr.vol.integrate(Rat(0), pr.tau) / (Rat(pr.polar_degree) * pr.theta_sq);
}

Rat s_from_profile(const FlagConfig& cfg, const ZariskiProfile& pr) {
    return s_over_c(cfg, pr) * cfg.c_value();
}

Rat s_restricted_over_c(const FlagConfig& cfg, const ZariskiProfile& pr, const std::string& q) {
    bool found = false;
    bool on_negative = false;
    for (const auto& pt : named_points(cfg))
        if (pt.label == q) {
            found = true;
            on_negative = pt.on_negative_part;
        }
    if (!found) throw std::domain_error("unknown point '" + q + "' for this preset");

    // integral of (P.E) ord_q(N|_E) + (P.E)^2/2 over [0, tau]
    Rat total(0);
    for (size_t i = 0; i < pr.p_dot_e.piece_count(); ++i) {
        const Rat& a = pr.p_dot_e.breakpoint(i);
        const Rat& b = pr.p_dot_e.breakpoint(i + 1);
        Poly pe = pr.p_dot_e.piece(i);
        Poly integrand = Rat(1, 2) * pe * pe;
        if (on_negative) {
            auto it = pr.ord_n_at.find(q);
            if (it != pr.ord_n_at.end()) integrand += pe * it->second.piece(i);
        }
        Poly F = integrand.antiderivative();
        total += F.eval(b) - F.eval(a);
    }
    return Rat(2) * total / (Rat(pr.polar_degree) * pr.theta_sq);
}

Rat s_restricted_at(const FlagConfig& cfg, const ZariskiProfile& pr, const std::string& q) {
    return s_restricted_over_c(cfg, pr, q) * cfg.c_value();
}

AZReport az_delta_bound(const FlagConfig& cfg) {
    ZariskiProfile pr = build_profile(cfg);
    AZReport rep;
    rep.a_e = a_e_in_w(cfg).eval(cfg.w);
    rep.s_e = s_from_profile(cfg, pr);
    rep.delta_lower_bound = rep.a_e / rep.s_e;
    for (const auto& pt : named_points(cfg)) {
        AZPointRatio r;
        r.a_value = pt.a.eval(cfg.w);
        r.s_value = s_restricted_at(cfg, pr, pt.label);
        rep.ratios.emplace(pt.label, r);
        rep.delta_lower_bound = min(rep.delta_lower_bound, r.a_value / r.s_value);
    }
    return rep;
}

Rat solve_critical_weight(const FlagConfig& cfg) {
    if (cfg.preset != FlagPreset::special_point_odd &&
        cfg.preset != FlagPreset::special_point_even)
        throw std::domain_error("critical weight is defined for the special-point presets");
    ZariskiProfile pr = build_profile(cfg);
    Poly diff = a_e_in_w(cfg) - s_over_c(cfg, pr) * cfg.c_in_w();
    if (diff.degree() != 1) throw std::domain_error("degenerate: A and S are parallel in w");
    return -diff.coeff(0) / diff.coeff(1);
}

}  // namespace kwall
