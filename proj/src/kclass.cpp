#include "kwall/kclass.hpp"

#include <stdexcept>

namespace kwall {

namespace {

Rat affine_eval(const Poly& f, const Rat& w) { return f.eval(w); }

Poly affine(const Rat& c0, const Rat& c1) { return Poly({c0, c1}); }

// deg(-(K + Delta_w)) as a degree-1 polynomial in w.
Poly log_fano_degree_in_w(long n) {
    if (n % 2) return affine(Rat(n + 5), Rat(-(2 * n + 6)));
    long l = n / 2;
    return affine(Rat(l + 3) - Rat(1, 2), Rat(-(2 * l + 3)));
}

}  // namespace

bool WSet::contains(const Rat& w) const {
    switch (kind) {
        case Kind::empty: return false;
        case Kind::singleton: return w == lo;
        case Kind::interval:
            if (w < lo || w > hi) return false;
            if (w == lo && !lo_closed) return false;
            if (w == hi && !hi_closed) return false;
            return true;
    }
    return false;
}

const char* to_string(KVerdict v) {
    switch (v) {
        case KVerdict::unstable: return "unstable";
        case KVerdict::strictly_semistable: return "strictly_semistable";
        case KVerdict::polystable: return "polystable";
        case KVerdict::stable: return "stable";
    }
    return "?";
}

StabilityVerdict kss_domain(const FamilyPoint& p) {
    long n = p.n;
    Rat end = domain_end(n);
    Rat xi = xi_value(n);
    StabilityVerdict v;

    if (p.is_zero()) {
        v.table_row = "zero";
        v.notes = "zero coefficient point";
        return v;
    }
    auto topt = p.t();
    if (!topt) {
        v.table_row = "degenerate";
        v.notes = "a_i all zero: unstable at every w";
        return v;
    }
    long t = *topt;
    // thresholds: t must exceed (n+3)/2 (odd) resp. l+1 (even)
    long t_min = (n + 5) / 2;
    long m0_small_max = (n + 1) / 2;
    bool monomial = p.a.is_zero() && p.m0() && *p.m0() == t - 1;

    if (monomial) {
        v.table_row = "j";
        long e = t;
        long e_min = n % 2 ? (n + 3) / 2 : n / 2 + 2;
        if (n % 2 && e == (n + 3) / 2) {
            v.notes = "polystable only at the excluded log-Calabi-Yau boundary w = " + end.str();
            return v;
        }
        if (e < e_min) {
            v.table_row = "degenerate";
            v.notes = "monomial member below the legal range: unstable at every w";
            return v;
        }
        Rat wc = wall_value(n, n + 3 - e);
        v.semistable = WSet::singleton(wc);
        v.polystable = WSet::singleton(wc);
        return v;
    }

    if (t < t_min) {
        v.table_row = "degenerate";
        v.notes = "t below the stable range: unstable at every w";
        return v;
    }

    Rat w_lo = wall_value(n, n + 3 - t);
    bool top = t == n + 3;
    if (!p.a.is_zero() && top && lct_pair(p).is_dss) {
        v.table_row = "a";
        v.semistable = WSet::interval(w_lo, xi, true, true);
        v.polystable = WSet::interval(w_lo, xi, false, false);
        return v;
    }
    if (p.a.is_zero() && p.ai[0].is_zero()) {
        long m0 = *p.m0();
        if (m0 <= m0_small_max) {
            v.table_row = top ? "d" : "h";
            v.semistable = WSet::interval(w_lo, end, true, false);
            v.polystable = WSet::interval(w_lo, end, false, false);
        } else {
            v.table_row = top ? "e" : "i";
            Rat w_hi = wall_value(n, n + 2 - m0);
            v.semistable = WSet::interval(w_lo, w_hi, true, true);
            v.polystable = WSet::interval(w_lo, w_hi, false, false);
        }
        return v;
    }
    if (!p.a.is_zero()) {
        v.table_row = top ? "b" : "f";
    } else {
        v.table_row = top ? "c" : "g";
    }
    v.semistable = WSet::interval(w_lo, end, true, false);
    v.polystable = WSet::interval(w_lo, end, false, false);
    return v;
}

KVerdict classify_at(const FamilyPoint& p, const Rat& w) {
    Rat end = domain_end(p.n);
    if (w == end)
        throw std::domain_error("log-Calabi-Yau boundary w = " + end.str() + " is excluded");
    if (!(Rat(0) < w) || !(w < end)) throw std::domain_error("w outside the coefficient domain");
    StabilityVerdict v = kss_domain(p);
    if (!v.semistable.contains(w)) return KVerdict::unstable;
    if (!v.polystable.contains(w)) return KVerdict::strictly_semistable;
    return v.table_row == "j" ? KVerdict::polystable : KVerdict::stable;
}

PolystablePair monomial_pair(long n, long e) {
    long e_min = n % 2 ? (n + 3) / 2 : n / 2 + 2;
    if (e < e_min || e > n + 3)
        throw std::domain_error("monomial member index outside the legal range");
    return PolystablePair{PairKind::monomial_de, n, e, {}};
}

PolystablePair dss_pair(long n) { return PolystablePair{PairKind::dss_pair, n, 0, {}}; }

PolystablePair last_wall_replacement(long n) {
    if (n < 1) throw std::domain_error("n must be a positive integer");
    if (n % 2) return PolystablePair{PairKind::w0_d0, n, 0, {}};
    return PolystablePair{PairKind::wprime_h0_d0, n, 0, {}};
}

FamilyPoint monomial_point(long n, long e) {
    if (e < 0 || e > n + 3) throw std::domain_error("coefficient index out of range");
    std::vector<Rat> ai(n + 4);
    ai[e] = Rat(1);
    return FamilyPoint(n, Rat(0), std::move(ai));
}

WallDegeneration wall_degeneration(const FamilyPoint& p, long wall_index) {
    long n = p.n;
    if (wall_index < 0 || wall_index > last_wall_index(n))
        throw std::domain_error("no wall with this index");
    long e = n + 3 - wall_index;

    bool upper_zero = true;  // a_{e+1} .. a_{n+3} all zero
    for (long j = e + 1; j <= n + 3; ++j)
        if (!p.ai[j].is_zero()) upper_zero = false;
    bool lower_zero = p.a.is_zero();  // a, a_0 .. a_{e-1} all zero
    for (long j = 0; j < e && lower_zero; ++j)
        if (!p.ai[j].is_zero()) lower_zero = false;
    bool pinned = !p.ai[e].is_zero();

    OneParamSubgroup lam;
    if (pinned && upper_zero && !lower_zero) {
        lam = {-2, 1 - e};  // contracted approaching the wall from above
    } else if (pinned && lower_zero && !upper_zero) {
        lam = {2, e - 1};  // contracted approaching from below
    } else {
        throw std::domain_error("not-contracted-here");
    }
    return {monomial_pair(n, e), lam};
}

namespace {

long w0_half_degree(long n) { return ((n + 3) * (n + 3)) / 2; }

void check_w0_curve(const W0Curve& c) {
    if (c.n < 1 || c.n % 2 == 0)
        throw std::domain_error("degeneration-surface curves need odd n");
    long half = w0_half_degree(c.n);
    if (static_cast<long>(c.c1.size()) != half / (c.n + 2) + 1 ||
        static_cast<long>(c.c0.size()) != c.n + 5)
        throw std::domain_error("coefficient list lengths do not match the degree");
}

}  // namespace

W0Curve d1_curve(long n, const std::vector<Rat>& b) {
    if (n < 1 || n % 2 == 0) throw std::domain_error("d1 curves need odd n");
    if (static_cast<long>(b.size()) != n + 3)
        throw std::domain_error("d1 coefficient vector must have length n+3");
    W0Curve c;
    c.n = n;
    c.c2 = Rat(1);
    c.c1.assign(w0_half_degree(n) / (n + 2) + 1, Rat(0));
    c.c0.assign(n + 5, Rat(0));
    c.c0[n + 4] = Rat(-1);  // the x0 x1^{n+4} term
    for (long i = 0; i <= n + 2; ++i) c.c0[i] = b[i];
    return c;
}

std::vector<Rat> d1_normal_form(long n, const W0Curve& curve) {
    check_w0_curve(curve);
    if (curve.n != n) throw std::invalid_argument("curve parameter mismatch");
    if (curve.c2.is_zero()) throw std::domain_error("not-in-D1-family: no x2^2 term");

    Rat inv = Rat(1) / curve.c2;
    std::vector<Rat> g(curve.c1.size()), h(curve.c0.size());
    for (size_t j = 0; j < g.size(); ++j) g[j] = curve.c1[j] * inv;
    for (size_t j = 0; j < h.size(); ++j) h[j] = curve.c0[j] * inv;

    // x2 -> x2 - g/2 turns c2 x2^2 + g x2 + h into x2^2 + (h - g^2/4);
    // the x1-degree bookkeeping is a plain convolution.
    for (size_t j1 = 0; j1 < g.size(); ++j1)
        for (size_t j2 = 0; j2 < g.size(); ++j2)
            if (j1 + j2 < h.size()) h[j1 + j2] -= g[j1] * g[j2] / Rat(4);

    if (h[n + 4].is_zero())
        throw std::domain_error("not-in-D1-family: no x0 x1^{n+4} term after the square completion");

    // Rescale x0 so the x0 x1^{n+4} coefficient becomes -1; the x0-exponent
    // of the j-th entry is (n+3)^2 - (n+2)j.
    Rat s0 = Rat(-1) / h[n + 4];
    long sq = (n + 3) * (n + 3);
    for (long j = 0; j <= n + 4; ++j) h[j] *= s0.pow(sq - (n + 2) * j);

    // x1 -> x1 + s x0^{n+2} with s = h[n+3]/(n+4) kills the
    // x0^{n+3} x1^{n+3} term.
    Rat s = h[n + 3] / Rat(n + 4);
    std::vector<Rat> shifted(h.size());
    for (long j = 0; j <= n + 4; ++j)
        for (long k = 0; k <= j; ++k)
            shifted[k] += h[j] * Rat(binomial(j, k)) * s.pow(j - k);
    if (!shifted[n + 3].is_zero() || shifted[n + 4] != Rat(-1))
        throw std::logic_error("normal-form reduction failed");

    return std::vector<Rat>(shifted.begin(), shifted.begin() + (n + 3));
}

KVerdict d1_stability(long n, const std::vector<Rat>& b, const Rat& w) {
    // odd: (b_0..b_{n+2}); even n = 2l: (b_1..b_{2l+3})
    long expected = n % 2 ? n + 3 : n + 1;
    if (static_cast<long>(b.size()) != expected)
        throw std::domain_error("coefficient vector must have length " +
                                std::to_string(expected));
    Rat end = domain_end(n);
    if (!(Rat(0) < w) || !(w < end)) throw std::domain_error("w outside the coefficient domain");
    Rat xi = xi_value(n);
    bool all_zero = true;
    for (const auto& c : b)
        if (!c.is_zero()) all_zero = false;
    if (all_zero) return w == xi ? KVerdict::polystable : KVerdict::unstable;
    if (w < xi) return KVerdict::unstable;
    if (w == xi) return KVerdict::strictly_semistable;
    return KVerdict::stable;
}

MPoly family_polynomial(const FamilyPoint& p) {
    // Always in the ambient x-coordinates (even parity reads u = x^2), so
    // the expansion matches the hypersurface reduction for both parities.
    long n = p.n;
    MPoly f = MPoly::term(Rat(1), {0, 1, 2, 0});  // z^2 y
    if (!p.a.is_zero()) f += MPoly::term(p.a, {static_cast<int>(n + 4), 0, 1, 0});
    for (long i = 0; i <= n + 3; ++i)
        if (!p.ai[i].is_zero())
            f += MPoly::term(p.ai[i],
                             {static_cast<int>(2 * n + 6 - 2 * i), static_cast<int>(i), 0, 0});
    return f;
}

HypersurfaceReduction reduce_hypersurface(long n, const MPoly& f) {
    const int X = 0, Y = 1, Z = 2, T = 3;
    std::array<long, 4> wts{1, 2, n + 2, n + 3};
    if (f.is_zero() || f.weighted_degree(wts) != 2 * n + 6)
        throw std::domain_error("input is not quasi-homogeneous of degree 2n+6");

    Rat ctt = f.coeff({0, 0, 0, 2});
    if (ctt.is_zero()) throw std::domain_error("outside-family: no t^2 term");
    MPoly g = (Rat(1) / ctt) * f;

    // kill the t-linear part: t -> t - T_lin/2
    MPoly t_lin;
    for (const auto& [e, c] : g.terms())
        if (e[T] == 1) {
            auto r = e;
            r[T] = 0;
            t_lin += MPoly::term(c, r);
        }
    MPoly t_half = Rat(1, 2) * t_lin;
    g = g.substitute(T, MPoly::variable(T) - t_half);
    for (const auto& [e, c] : g.terms())
        if (e[T] == 1) throw std::logic_error("t-linear term survived the shift");

    Rat gamma = g.coeff({0, 1, 2, 0});
    if (gamma.is_zero()) throw std::domain_error("outside-family: no z^2 y term");
    Rat y_scale = Rat(1) / gamma;
    g = g.substitute(Y, y_scale * MPoly::variable(Y));

    // kill z^2 x^2: y -> y - beta x^2
    Rat beta = g.coeff({2, 0, 2, 0});
    MPoly y_shift = MPoly::term(beta, {2, 0, 0, 0});
    g = g.substitute(Y, MPoly::variable(Y) - y_shift);

    // z-linear part is a x^{n+4} + y h1; z -> z - h1/2 leaves a x^{n+4}
    MPoly h1;
    Rat a(0);
    for (const auto& [e, c] : g.terms())
        if (e[Z] == 1 && e[T] == 0) {
            if (e[Y] == 0) {
                if (e[X] != n + 4) throw std::logic_error("unexpected z-linear monomial");
                a = c;
            } else {
                auto r = e;
                r[Z] = 0;
                r[Y] -= 1;
                h1 += MPoly::term(c, r);
            }
        }
    MPoly z_half = Rat(1, 2) * h1;
    g = g.substitute(Z, MPoly::variable(Z) - z_half);

    // read off the family coefficients
    std::vector<Rat> ai(n + 4);
    for (const auto& [e, c] : g.terms()) {
        if (e[T] == 2 && e[X] == 0 && e[Y] == 0 && e[Z] == 0) continue;
        if (e[Z] == 2 && e[Y] == 1 && e[X] == 0 && e[T] == 0) continue;
        if (e[Z] == 1 && e[Y] == 0 && e[X] == n + 4 && e[T] == 0) continue;
        if (e[Z] == 0 && e[T] == 0 && e[X] == 2 * n + 6 - 2 * e[Y]) {
            ai[e[Y]] = c;
            continue;
        }
        throw std::logic_error("reduction left an unexpected monomial");
    }
    HypersurfaceReduction red{FamilyPoint(n, a, std::move(ai)), ctt, y_scale, t_half, y_shift,
                              z_half};
    return red;
}

MPoly expand_reduction(const HypersurfaceReduction& red) {
    const int Y = 1, Z = 2, T = 3;
    MPoly g = family_polynomial(red.point);
    g += MPoly::term(Rat(1), {0, 0, 0, 2});  // t^2
    g = g.substitute(Z, MPoly::variable(Z) + red.z_half);
    g = g.substitute(Y, MPoly::variable(Y) + red.y_shift);
    g = g.substitute(Y, (Rat(1) / red.y_scale) * MPoly::variable(Y));
    g = g.substitute(T, MPoly::variable(T) + red.t_half);
    return red.scale * g;
}

namespace {

struct ComplexityOneData {
    Poly r;             // deg(-(K + Delta_w)) in w
    Poly torus_a;       // A of the torus valuation, in w
    Rat torus_s_unit;   // S_{O(1)} of the torus valuation
    struct Divisor {
        std::string label;
        Rat degree;
        Poly a;   // log discrepancy in w
        bool horizontal = false;
    };
    std::vector<Divisor> divisors;
};

ComplexityOneData complexity_one_data(const PolystablePair& cfg) {
    ComplexityOneData d;
    long n = cfg.n;
    if (cfg.kind == PairKind::monomial_de) {
        long e = cfg.e;
        d.r = log_fano_degree_in_w(n);
        if (n % 2) {
            // W = P(1,2,n+2), D_e = z^2 y + x^{2n+6-2e} y^e,
            // torus t.(x,z) = (tx, t^{n+3-e}z)
            d.torus_a = affine(Rat(n + 4 - e), Rat(-(2 * n + 6 - 2 * e)));
            d.torus_s_unit = (Rat(1) + Rat(n + 3 - e, n + 2)) / Rat(3);
            d.divisors.push_back({"y=0", Rat(2), affine(Rat(1), Rat(-1)), false});
            d.divisors.push_back({"z=0", Rat(n + 2), Poly(Rat(1)), false});
            d.divisors.push_back({"x=0", Rat(1), Poly(Rat(1)), e == n + 3});
            if (e % 2) {  // branch components z = +-i x^{n+3-e} y^{(e-1)/2}
                d.divisors.push_back({"branch component", Rat(n + 2), affine(Rat(1), Rat(-1)), false});
                d.divisors.push_back({"pencil member", Rat(n + 2), Poly(Rat(1)), false});
            } else {  // invariant conics z^2 = c x^{2n+6-2e} y^{e-1}
                d.divisors.push_back({"branch conic", Rat(2 * n + 4), affine(Rat(1), Rat(-1)), false});
                d.divisors.push_back({"pencil conic", Rat(2 * n + 4), Poly(Rat(1)), false});
            }
        } else {
            // W' = P(1,1,l+1) with boundary H/2, D_e = z^2 y + u^{2l+3-e} y^e,
            // torus t.(u,z) = (t^2 u, t^{2l+3-e}z)
            long l = n / 2;
            d.torus_a = affine(Rat(2 * l + 4 - e), Rat(-2 * (2 * l + 3 - e)));
            d.torus_s_unit = (Rat(2) + Rat(2 * l + 3 - e, l + 1)) / Rat(3);
            d.divisors.push_back({"y=0", Rat(1), affine(Rat(1), Rat(-1)), false});
            d.divisors.push_back({"u=0", Rat(1), Poly(Rat(1, 2)), e == 2 * l + 3});
            d.divisors.push_back({"z=0", Rat(l + 1), Poly(Rat(1)), false});
            if (e % 2) {  // z = a u^{(2l+3-e)/2} y^{(e-1)/2}
                d.divisors.push_back({"branch component", Rat(l + 1), affine(Rat(1), Rat(-1)), false});
                d.divisors.push_back({"pencil member", Rat(l + 1), Poly(Rat(1)), false});
            } else {  // z^2 = c u^{2l+3-e} y^{e-1}
                d.divisors.push_back({"branch conic", Rat(2 * l + 2), affine(Rat(1), Rat(-1)), false});
                d.divisors.push_back({"pencil conic", Rat(2 * l + 2), Poly(Rat(1)), false});
            }
        }
        return d;
    }
    if (cfg.kind == PairKind::w0_d0) {
        if (n % 2 == 0) throw std::domain_error("the degeneration surface pair needs odd n");
        // W0 = P(1, n+2, (n+3)^2/2), D0: x2^2 = x0 x1^{n+4},
        // torus t.(x1,x2) = (t^2 x1, t^{n+4} x2)
        long half = w0_half_degree(n);
        d.r = affine(Rat((n + 3) * (n + 5), 2), Rat(-(n + 3) * (n + 3)));
        d.torus_a = affine(Rat(n + 6), Rat(-(2 * n + 8)));
        d.torus_s_unit = (Rat(2, n + 2) + Rat(n + 4) / Rat(half)) / Rat(3);
        d.divisors.push_back({"x0=0", Rat(1), Poly(Rat(1)), false});
        d.divisors.push_back({"x1=0", Rat(n + 2), Poly(Rat(1)), false});
        d.divisors.push_back({"x2=0", Rat(half), Poly(Rat(1)), false});
        d.divisors.push_back({"member curve", Rat(2 * half), affine(Rat(1), Rat(-1)), false});
        d.divisors.push_back({"pencil curve", Rat(2 * half), Poly(Rat(1)), false});
        return d;
    }
    if (cfg.kind == PairKind::wprime_h0_d0) {
        if (n % 2) throw std::domain_error("the even replacement pair needs even n");
        // W' = P(1,1,l+1), boundary H0/2 with H0: y=0, D0 = z(zy - u^{l+2}),
        // torus t.(u,y) = (tu, t^{l+2}y)
        long l = n / 2;
        d.r = log_fano_degree_in_w(n);
        d.torus_a = affine(Rat(l + 3) - Rat(l + 2, 2), Rat(-(l + 2)));
        d.torus_s_unit = Rat(l + 3, 3);
        d.divisors.push_back({"u=0", Rat(1), Poly(Rat(1)), false});
        d.divisors.push_back({"y=0", Rat(1), Poly(Rat(1, 2)), false});
        d.divisors.push_back({"z=0", Rat(l + 1), affine(Rat(1), Rat(-1)), false});
        d.divisors.push_back({"member curve", Rat(l + 2), affine(Rat(1), Rat(-1)), false});
        d.divisors.push_back({"pencil curve", Rat(l + 2), Poly(Rat(1)), false});
        return d;
    }
    throw std::domain_error("not a complexity-one configuration");
}

}  // namespace

Rat complexity_one_critical_weight(const PolystablePair& cfg) {
    ComplexityOneData d = complexity_one_data(cfg);
    // solve A(w) = S_unit * r(w), both affine in w
    Poly diff = d.torus_a - d.torus_s_unit * d.r;
    if (diff.degree() != 1) throw std::domain_error("degenerate: beta does not depend on w");
    return -diff.coeff(0) / diff.coeff(1);
}

ComplexityOneReport verify_complexity_one_polystable(const PolystablePair& cfg, const Rat& w) {
    ComplexityOneData d = complexity_one_data(cfg);
    ComplexityOneReport rep;
    Rat r = affine_eval(d.r, w);
    rep.torus_beta = affine_eval(d.torus_a, w) - d.torus_s_unit * r;
    rep.ok = rep.torus_beta.is_zero();
    for (const auto& div : d.divisors) {
        BetaEntry entry;
        entry.divisor = div.label;
        entry.degree = div.degree;
        entry.a_value = affine_eval(div.a, w);
        entry.s_value = r / (Rat(3) * div.degree);
        entry.beta = entry.a_value - entry.s_value;
        if (div.horizontal) {
            if (!entry.beta.is_zero()) rep.ok = false;
            rep.horizontal.push_back(entry);
        } else {
            if (!(entry.beta > Rat(0))) rep.ok = false;
            rep.vertical.push_back(entry);
        }
    }
    return rep;
}

}  // namespace kwall
