#include "kwall/wps.hpp"

#include <numeric>
#include <stdexcept>

namespace kwall {

WPPlane::WPPlane(long m0, long m1, long m2, std::array<std::string, 3> labels)
    : weights_{m0, m1, m2}, labels_(std::move(labels)) {
    for (long m : weights_)
        if (m <= 0) throw std::domain_error("plane weights must be positive");
    if (std::gcd(m0, m1) != 1 || std::gcd(m0, m2) != 1 || std::gcd(m1, m2) != 1)
        throw std::domain_error("plane is not well-formed: weights share a factor");
}

LogBoundary::LogBoundary(const WPPlane& plane, std::vector<Component> components)
    : components_(std::move(components)) {
    Rat total(0);
    for (const auto& c : components_) {
        if (c.coefficient < Rat(0) || c.coefficient >= Rat(1))
            throw std::domain_error("boundary coefficient outside [0,1)");
        if (c.degree < Rat(0)) throw std::domain_error("boundary component of negative degree");
        total += c.coefficient * c.degree;
    }
    if (!(total < Rat(plane.anticanonical_degree())))
        throw std::domain_error("boundary is not log Fano");
}

Rat LogBoundary::weighted_degree() const {
    Rat total(0);
    for (const auto& c : components_) total += c.coefficient * c.degree;
    return total;
}

Rat log_fano_degree(const WPPlane& plane, const LogBoundary& boundary) {
    return Rat(plane.anticanonical_degree()) - boundary.weighted_degree();
}

Rat intersection_number(const WPPlane& plane, const Rat& k1, const Rat& k2) {
    return k1 * k2 / Rat(plane.weight_product());
}

long h0_count(const WPPlane& plane, long k) {
    if (k < 0) return 0;
    long count = 0;
    long m0 = plane.weight(0), m1 = plane.weight(1), m2 = plane.weight(2);
    for (long c = 0; c * m2 <= k; ++c)
        for (long b = 0; b * m1 + c * m2 <= k; ++b)
            if ((k - b * m1 - c * m2) % m0 == 0) ++count;
    return count;
}

Rat s_invariant_divisor(const WPPlane& plane, const LogBoundary& boundary, const Rat& k) {
    if (!(k > Rat(0))) throw std::domain_error("divisor class degree must be positive");
    return log_fano_degree(plane, boundary) / (Rat(3) * k);
}

MonomialValuation::MonomialValuation(WPPlane p, int chart_index, Rat wa, Rat wb)
    : plane(std::move(p)), chart(chart_index), a(std::move(wa)), b(std::move(wb)) {
    if (chart < 0 || chart > 2) throw std::domain_error("chart index out of range");
    if (a < Rat(0) || b < Rat(0) || (a.is_zero() && b.is_zero()))
        throw std::domain_error("valuation weights must be nonnegative, not both zero");
}

Rat s_invariant_monomial(const MonomialValuation& v, const LogBoundary& boundary) {
    Rat per_unit = (v.a / Rat(v.plane.weight(v.coord_j())) +
                    v.b / Rat(v.plane.weight(v.coord_k()))) /
                   Rat(3);
    return log_fano_degree(v.plane, boundary) * per_unit;
}

Rat beta_monomial(const MonomialValuation& v, const LogBoundary& boundary,
                  const std::vector<Rat>& boundary_values) {
    if (boundary_values.size() != boundary.components().size())
        throw std::invalid_argument("one valuation value per boundary component required");
    Rat a_log = v.log_discrepancy();
    for (size_t i = 0; i < boundary_values.size(); ++i)
        a_log -= boundary.components()[i].coefficient * boundary_values[i];
    return a_log - s_invariant_monomial(v, boundary);
}

}  // namespace kwall
