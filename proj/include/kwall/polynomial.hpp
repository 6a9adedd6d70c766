#pragma once

// Univariate polynomials over the rationals, coefficients stored lowest
// degree first, plus the squarefree machinery (Yun's gcd chain) that every
// multiplicity computation in the project runs on.

#include "kwall/rational.hpp"

#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace kwall {

class Poly {
  public:
    Poly() = default;
    Poly(const Rat& c) {
        if (!c.is_zero()) c_.push_back(c);
    }
    Poly(int c) : Poly(Rat(c)) {}
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static Poly variable() { return Poly({Rat(0), Rat(1)}); }
    // c * X^k
    static Poly monomial(const Rat& c, int k) {
        if (c.is_zero()) return Poly();
        std::vector<Rat> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
        return c_[i];
    }
    const Rat& leading() const {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }
    const std::vector<Rat>& coeffs() const { return c_; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Rat& s, const Poly& p) {
        Poly r = p;
        for (auto& c : r.c_) c *= s;
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& p, const Rat& s) { return s * p; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rat eval(const Rat& x) const {  // Horner
        Rat r(0);
        for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rat(static_cast<long long>(i)) * c_[i];
        return Poly(std::move(v));
    }

    Poly antiderivative() const {  // constant term 0
        if (is_zero()) return Poly();
        std::vector<Rat> v(c_.size() + 1);
        for (size_t i = 0; i < c_.size(); ++i) v[i + 1] = c_[i] / Rat(static_cast<long long>(i + 1));
        return Poly(std::move(v));
    }

    Poly pow(long e) const {
        if (e < 0) throw std::domain_error("negative polynomial power");
        Poly r(Rat(1)), b = *this;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Quotient/remainder; exact field division over Q.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        Poly rem = a, quot;
        std::vector<Rat> q(std::max(0, a.degree() - b.degree() + 1));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int k = rem.degree() - b.degree();
            Rat f = rem.leading() / b.leading();
            q[k] = f;
            rem -= Poly::monomial(f, k) * b;
        }
        quot = Poly(std::move(q));
        return {quot, rem};
    }
    friend Poly operator/(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    bool divides(const Poly& a) const { return divmod(a, *this).second.is_zero(); }

    Poly monic() const {
        if (is_zero()) return *this;
        return (Rat(1) / leading()) * *this;
    }

    // p(X + c): degree and leading coefficient preserved.
    Poly shifted(const Rat& c) const {
        Poly r, xc({c, Rat(1)}), power(Rat(1));
        for (size_t i = 0; i < c_.size(); ++i) {
            r += c_[i] * power;
            power *= xc;
        }
        return r;
    }

    // p(sX)
    Poly scaled_arg(const Rat& s) const {
        std::vector<Rat> v = c_;
        Rat f(1);
        for (size_t i = 1; i < v.size(); ++i) {
            f *= s;
            v[i] *= f;
        }
        return Poly(std::move(v));
    }

    Poly compose(const Poly& q) const {  // p(q(X))
        Poly r;
        for (size_t i = c_.size(); i-- > 0;) r = r * q + Poly(c_[i]);
        return r;
    }

    std::string str(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = c_.size(); i-- > 0;) {
            if (c_[i].is_zero()) continue;
            if (!first) os << (c_[i].sign() > 0 ? " + " : " - ");
            Rat a = first ? c_[i] : c_[i].abs();
            first = false;
            if (i == 0 || a != Rat(1)) os << a.str();
            if (i > 0) {
                os << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = r.monic();  // keeps coefficient growth down
    }
    return a.monic();
}

struct SquarefreeFactor {
    Poly factor;       // monic, squarefree
    int multiplicity;  // >= 1
};

// Yun's algorithm over Q. Factors are monic, pairwise coprime, listed with
// strictly increasing multiplicities; the product of factor^multiplicity
// equals the input up to a nonzero constant. Constants decompose to the
// empty list.
inline std::vector<SquarefreeFactor> squarefree_decompose(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("zero-polynomial");
    std::vector<SquarefreeFactor> out;
    if (p.degree() < 1) return out;
    Poly q = p.monic();
    Poly g = gcd(q, q.derivative());
    if (g.degree() == 0) {
        out.push_back({q, 1});
        return out;
    }
    Poly b = q / g;
    Poly d = q.derivative() / g - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly a = gcd(b, d);
        if (a.degree() > 0) out.push_back({a.monic(), i});
        b = b / a;
        d = d / a - b.derivative();
        ++i;
    }
    return out;
}

// Maximum multiplicity of a complex root (0 for constants). With
// exclude_zero the root X = 0 is skipped; a degree-1 factor vanishing at 0
// carries no other root and drops out entirely.
inline int max_root_multiplicity(const Poly& p, bool exclude_zero = false) {
    if (p.is_zero()) throw std::domain_error("zero-polynomial");
    int m = 0;
    for (const auto& f : squarefree_decompose(p)) {
        if (exclude_zero && f.factor.coeff(0).is_zero() && f.factor.degree() == 1) continue;
        if (f.multiplicity > m) m = f.multiplicity;
    }
    return m;
}

}  // namespace kwall
