#pragma once

// Continuous piecewise polynomials on a breakpoint grid, with exact
// integration. Continuity at interior breakpoints is checked at
// construction; a violation is a construction bug upstream, not data.

#include "kwall/polynomial.hpp"

#include <stdexcept>
#include <vector>

namespace kwall {

class PiecewisePoly {
  public:
    PiecewisePoly() : breaks_{Rat(0), Rat(1)}, pieces_{Poly()} {}  // zero on [0,1]
    PiecewisePoly(std::vector<Rat> breakpoints, std::vector<Poly> pieces)
        : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
        if (breaks_.size() < 2 || pieces_.size() + 1 != breaks_.size())
            throw std::invalid_argument("piecewise: need k+1 breakpoints for k pieces");
        for (size_t i = 0; i + 1 < breaks_.size(); ++i)
            if (!(breaks_[i] < breaks_[i + 1]))
                throw std::invalid_argument("piecewise: breakpoints must strictly increase");
        for (size_t i = 0; i + 1 < pieces_.size(); ++i)
            if (pieces_[i].eval(breaks_[i + 1]) != pieces_[i + 1].eval(breaks_[i + 1]))
                throw std::invalid_argument("piecewise: discontinuity at interior breakpoint");
    }

    const Rat& lo() const { return breaks_.front(); }
    const Rat& hi() const { return breaks_.back(); }
    size_t piece_count() const { return pieces_.size(); }
    const Poly& piece(size_t i) const { return pieces_.at(i); }
    const Rat& breakpoint(size_t i) const { return breaks_.at(i); }

    Rat eval(const Rat& t) const {
        if (t < lo() || t > hi()) throw std::domain_error("out-of-domain");
        for (size_t i = 0; i < pieces_.size(); ++i)
            if (t <= breaks_[i + 1]) return pieces_[i].eval(t);
        return pieces_.back().eval(t);
    }

    Rat integrate(const Rat& a, const Rat& b) const {
        if (a > b) throw std::domain_error("out-of-domain");
        if (a < lo() || b > hi()) throw std::domain_error("out-of-domain");
        Rat total(0);
        for (size_t i = 0; i < pieces_.size(); ++i) {
            Rat left = max(a, breaks_[i]);
            Rat right = min(b, breaks_[i + 1]);
            if (left < right) {
                Poly F = pieces_[i].antiderivative();
                total += F.eval(right) - F.eval(left);
            }
        }
        return total;
    }

  private:
    std::vector<Rat> breaks_;
    std::vector<Poly> pieces_;
};

}  // namespace kwall
