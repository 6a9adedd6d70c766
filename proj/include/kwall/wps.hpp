#pragma once

// Weighted projective planes and the A/S/beta calculus of toric monomial
// valuations on them. Degrees of divisor classes are rational multiples of
// O(1); boundaries are lists of (degree, coefficient) components.

#include "kwall/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kwall {

class WPPlane {
  public:
    // Throws if a weight is nonpositive or two weights share a factor
    // (the plane would not be well-formed).
    WPPlane(long m0, long m1, long m2,
            std::array<std::string, 3> labels = {"x0", "x1", "x2"});

    long weight(int i) const { return weights_.at(i); }
    const std::array<long, 3>& weights() const { return weights_; }
    const std::string& label(int i) const { return labels_.at(i); }
    const std::array<std::string, 3>& labels() const { return labels_; }

    long anticanonical_degree() const { return weights_[0] + weights_[1] + weights_[2]; }
    BigInt weight_product() const {
        return BigInt(weights_[0]) * weights_[1] * weights_[2];
    }

    friend bool operator==(const WPPlane& a, const WPPlane& b) {
        return a.weights_ == b.weights_;
    }

  private:
    std::array<long, 3> weights_;
    std::array<std::string, 3> labels_;
};

struct DivisorClass {
    WPPlane plane;
    Rat degree;  // multiple of O(1)
};

// Boundary divisor sum(coeff_i * component of degree deg_i); coefficients
// live in [0,1) and the pair must stay log Fano.
class LogBoundary {
  public:
    struct Component {
        Rat degree;
        Rat coefficient;
    };

    LogBoundary() = default;
    LogBoundary(const WPPlane& plane, std::vector<Component> components);

    const std::vector<Component>& components() const { return components_; }
    Rat weighted_degree() const;  // sum coeff * deg

  private:
    std::vector<Component> components_;
};

// deg(-(K+Delta)) = m0+m1+m2 - sum coeff*deg; positive by the log Fano check.
Rat log_fano_degree(const WPPlane& plane, const LogBoundary& boundary);

// O(k1).O(k2) = k1*k2/(m0*m1*m2)
Rat intersection_number(const WPPlane& plane, const Rat& k1, const Rat& k2);

// Number of monomials x0^a x1^b x2^c with a*m0 + b*m1 + c*m2 = k.
long h0_count(const WPPlane& plane, long k);

// S of the divisor class O(k) for the pair (plane, boundary): r/(3k).
Rat s_invariant_divisor(const WPPlane& plane, const LogBoundary& boundary, const Rat& k);

// Toric monomial valuation in the chart where coordinate `chart` is
// nonvanishing, with weights (a, b) on the remaining two coordinates in
// index order. Values on named boundary curves are supplied by callers.
struct MonomialValuation {
    WPPlane plane;
    int chart;  // 0, 1 or 2
    Rat a, b;   // >= 0, not both zero
    std::map<std::string, Rat> divisor_values;

    MonomialValuation(WPPlane p, int chart_index, Rat wa, Rat wb);

    int coord_j() const { return chart == 0 ? 1 : 0; }
    int coord_k() const { return chart == 2 ? 1 : 2; }
    Rat log_discrepancy() const { return a + b; }
};

// r * (1/3) (a/m_j + b/m_k)
Rat s_invariant_monomial(const MonomialValuation& v, const LogBoundary& boundary);

// (a + b - sum coeff_i * value_i) - S; boundary_values[i] = v(component i).
Rat beta_monomial(const MonomialValuation& v, const LogBoundary& boundary,
                  const std::vector<Rat>& boundary_values);

}  // namespace kwall
