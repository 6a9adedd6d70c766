#include "kwall/lct.hpp"

#include <stdexcept>

namespace kwall {

namespace {

// Residual after completing the square in chart y = 1, as a polynomial in
// the chart variable (X = x^2 for odd n, u for even), with the monomial
// factor stripped: Q = sum_{j<=t} a_j X^{t-j} - (a^2/4) X^{t+1}.
Poly residual_polynomial(const FamilyPoint& p, long t) {
    long deg_f = p.n % 2 ? 2 * p.n + 6 : 2 * (p.n / 2) + 3;  // degree in x resp. u
    long step = p.n % 2 ? 2 : 1;                             // a_j sits on x^{deg_f - 2j} / u^{deg_f - j}
    std::vector<Rat> full(deg_f + step + 1);                 // up to x^{2n+8} resp. u^{2l+4}
    for (long j = 0; j <= t; ++j) full[deg_f - step * j] += p.ai[j];
    if (!p.a.is_zero()) full[deg_f + step] -= p.a * p.a / Rat(4);
    if (p.n % 2) {
        // the substitution X = x^2 needs every exponent even
        for (size_t i = 1; i < full.size(); i += 2)
            if (!full[i].is_zero()) throw std::logic_error("residual not even in x");
    }
    long low = deg_f - step * t;
    std::vector<Rat> q;
    for (size_t i = low; i < full.size(); i += step) q.push_back(full[i]);
    return Poly(std::move(q));
}

Rat multiplicity_threshold(long m) { return Rat(m + 2, 2 * m); }

}  // namespace

CurveProfile curve_profile(const FamilyPoint& p) {
    if (p.is_zero()) throw std::domain_error("empty-curve");
    CurveProfile pr;
    auto topt = p.t();
    if (!topt) {
        pr.case_tag = CurveCase::all_zero;
        return pr;
    }
    long t = *topt;
    pr.t = t;

    if (!p.a.is_zero()) {
        pr.case_tag = CurveCase::a_nonzero;
        pr.analyzed = residual_polynomial(p, t);
        if (pr.analyzed.coeff(0).is_zero()) throw std::logic_error("residual divisible by X");
        pr.mult = max_root_multiplicity(pr.analyzed);
        pr.sum_mult = pr.analyzed.degree();  // = t+1
        return pr;
    }
    if (!p.ai[0].is_zero()) {
        pr.case_tag = CurveCase::a_zero_a0_nonzero;
        pr.analyzed = residual_polynomial(p, t);  // a = 0: degree t, leading a_0
        pr.mult = max_root_multiplicity(pr.analyzed);
        pr.sum_mult = pr.analyzed.degree();
        return pr;
    }
    // a = a_0 = 0: the curve splits off y; multiplicities live on
    // P(s) = sum_{j>m0} a_j s^{j-m0-1}, s the slope coordinate.
    pr.case_tag = CurveCase::reducible;
    long m0 = *p.m0();
    pr.m0 = m0;
    std::vector<Rat> coeffs;
    for (long j = m0 + 1; j <= t; ++j) coeffs.push_back(p.ai[j]);
    pr.analyzed = Poly(std::move(coeffs));
    if (pr.analyzed.coeff(0).is_zero()) throw std::logic_error("slope polynomial divisible by s");
    pr.mult = pr.analyzed.degree() >= 1 ? max_root_multiplicity(pr.analyzed) : 0;
    pr.sum_mult = pr.analyzed.degree();
    return pr;
}

LctReport lct_pair(const FamilyPoint& p) {
    CurveProfile pr = curve_profile(p);
    if (pr.case_tag == CurveCase::all_zero)
        throw std::domain_error("empty-curve: coefficients a_0..a_{n+3} all vanish");

    LctReport rep;
    rep.profile = pr;
    long t = *pr.t;
    Rat lct(1);
    if (pr.mult >= 1) lct = min(lct, multiplicity_threshold(pr.mult));
    if (pr.case_tag == CurveCase::reducible) {
        long m0 = *pr.m0;
        lct = min(lct, Rat(m0 + 2, 2 * m0 + 2));
    }
    if (p.parity() == Parity::odd) {
        if (t < p.n + 2) lct = min(lct, Rat(p.n + 4 - t, 2 * p.n + 6 - 2 * t));
    } else {
        long l = p.l();
        Rat along = t >= 2 * l + 2 ? Rat(1) : Rat(2 * l + 4 - t, 4 * l + 6 - 2 * t);
        rep.along_h = along;
        lct = min(lct, along);
    }
    rep.lct = lct;

    if (pr.mult >= 2) rep.singularity = "A" + std::to_string(pr.mult - 1);

    long tmax = p.parity() == Parity::odd ? p.n + 3 : 2 * p.l() + 3;
    if (pr.case_tag == CurveCase::a_nonzero && t == tmax && pr.mult == tmax + 1) {
        rep.is_dss = true;
        // Q = -(a^2/4)(X - b1)^{tmax+1}: normalize to (a, b1) = (-2, 1) by
        // the torus rescale (s1, s2) = (1/b1, -a b1/2).
        auto sq = squarefree_decompose(pr.analyzed);
        if (sq.size() != 1 || sq[0].factor.degree() != 1)
            throw std::logic_error("maximal multiplicity without a single linear factor");
        Rat b1 = -sq[0].factor.coeff(0);
        rep.dss_rescale = std::make_pair(Rat(1) / b1, -p.a * b1 / Rat(2));
    }
    return rep;
}

bool log_canonical_at(const FamilyPoint& p, const Rat& w) {
    return w <= lct_pair(p).lct;
}

FamilyPoint dss_point(long n) {
    std::vector<Rat> ai(n + 4);
    for (long i = 0; i <= n + 3; ++i)
        ai[i] = Rat((i % 2 ? -1 : 1) * binomial(n + 4, i + 1));
    return FamilyPoint(n, Rat(-2), std::move(ai));
}

}  // namespace kwall
