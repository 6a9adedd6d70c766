#pragma once

// Small sparse multivariate polynomials (up to 4 variables) over Rat.
// Just enough arithmetic for the coordinate changes in the hypersurface
// reduction and the normal-form computations: add, multiply, substitute a
// polynomial for one variable.

#include "kwall/rational.hpp"

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace kwall {

class MPoly {
  public:
    static constexpr int kVars = 4;
    using Exp = std::array<int, kVars>;

    MPoly() = default;
    explicit MPoly(const Rat& c) {
        if (!c.is_zero()) terms_[{0, 0, 0, 0}] = c;
    }
    static MPoly variable(int v) {
        MPoly p;
        Exp e{0, 0, 0, 0};
        e.at(v) = 1;
        p.terms_[e] = Rat(1);
        return p;
    }
    static MPoly term(const Rat& c, const Exp& e) {
        MPoly p;
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, Rat>& terms() const { return terms_; }

    Rat coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exp e;
                for (int i = 0; i < kVars; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const Rat& s, const MPoly& p) {
        MPoly r;
        if (s.is_zero()) return r;
        r = p;
        for (auto& [e, c] : r.terms_) c *= s;
        return r;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(long k) const {
        if (k < 0) throw std::domain_error("negative power");
        MPoly r(Rat(1)), b = *this;
        while (k > 0) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    // Replace variable v by the polynomial repl.
    MPoly substitute(int v, const MPoly& repl) const {
        MPoly r;
        std::map<int, MPoly> powers;  // repl^k cache
        powers[0] = MPoly(Rat(1));
        for (const auto& [e, c] : terms_) {
            int k = e.at(v);
            if (!powers.count(k)) powers[k] = repl.pow(k);
            Exp rest = e;
            rest[v] = 0;
            r += MPoly::term(c, rest) * powers[k];
        }
        return r;
    }

    // Weighted degree is uniform across terms for the quasi-homogeneous
    // polynomials we handle; -1 for the zero polynomial.
    long weighted_degree(const std::array<long, kVars>& wts) const {
        long deg = -1;
        for (const auto& [e, c] : terms_) {
            long d = 0;
            for (int i = 0; i < kVars; ++i) d += wts[i] * e[i];
            if (deg == -1) deg = d;
            else if (d != deg) throw std::domain_error("not quasi-homogeneous");
        }
        return deg;
    }

    std::string str(const std::array<std::string, kVars>& names) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.str();
            for (int i = 0; i < kVars; ++i)
                if (e[i] > 0) {
                    os << "*" << names[i];
                    if (e[i] > 1) os << "^" << e[i];
                }
        }
        return os.str();
    }

  private:
    void add_term(const Exp& e, const Rat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    std::map<Exp, Rat> terms_;
};

}  // namespace kwall
