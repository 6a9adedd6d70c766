#include "kwall/vgit.hpp"

#include <numeric>
#include <stdexcept>

namespace kwall {

namespace {

// Integer primitive direction of a rational vector.
std::pair<BigInt, BigInt> primitive(const Vec2Q& v) {
    if (v.x.is_zero() && v.y.is_zero())
        throw std::domain_error("zero vector has no direction");
    BigInt m = boost::multiprecision::lcm(v.x.den(), v.y.den());
    BigInt a = v.x.num() * (m / v.x.den());
    BigInt b = v.y.num() * (m / v.y.den());
    BigInt g = boost::multiprecision::gcd(a < 0 ? BigInt(-a) : a, b < 0 ? BigInt(-b) : b);
    return {a / g, b / g};
}

OneParamSubgroup to_ops(const std::pair<BigInt, BigInt>& v) {
    return OneParamSubgroup{v.first.convert_to<long long>(), v.second.convert_to<long long>()};
}

OneParamSubgroup primitive_ops(const Vec2Q& v) { return to_ops(primitive(v)); }

}  // namespace

FamilyPoint::FamilyPoint(long n_, Rat a_, std::vector<Rat> ai_)
    : n(n_), a(std::move(a_)), ai(std::move(ai_)) {
    if (n < 1) throw std::domain_error("n must be a positive integer");
    if (static_cast<long>(ai.size()) != n + 4)
        throw std::domain_error("coefficient list must have length n+4");
}

bool FamilyPoint::all_ai_zero() const {
    for (const auto& c : ai)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<long> FamilyPoint::t() const {
    for (long i = n + 3; i >= 0; --i)
        if (!ai[i].is_zero()) return i;
    return std::nullopt;
}

std::optional<long> FamilyPoint::m0() const {
    if (!a.is_zero() || !ai[0].is_zero()) return std::nullopt;
    for (long i = 1; i <= n + 3; ++i)
        if (!ai[i].is_zero()) return i - 1;
    return std::nullopt;
}

ConeQ2 ConeQ2::from_generators(std::vector<Vec2Q> gens) {
    ConeQ2 cone;
    for (const auto& g : gens) {
        auto [a, b] = primitive(g);
        Vec2Q ray{Rat(a), Rat(b)};
        bool dup = false;
        for (const auto& r : cone.rays_)
            if (r.x == ray.x && r.y == ray.y) dup = true;
        if (!dup) cone.rays_.push_back(ray);
    }
    if (cone.rays_.empty()) return cone;
    cone.lo_ = cone.hi_ = cone.rays_[0];
    cone.dim_ = 1;
    for (const auto& r : cone.rays_) {
        if (cross(r, cone.lo_) > Rat(0)) cone.lo_ = r;
        if (cross(cone.hi_, r) > Rat(0)) cone.hi_ = r;
    }
    if (cross(cone.lo_, cone.hi_) > Rat(0)) cone.dim_ = 2;
    return cone;
}

bool ConeQ2::contains(const Vec2Q& u) const {
    if (dim_ == 0) return u.x.is_zero() && u.y.is_zero();
    if (dim_ == 1) return cross(lo_, u).is_zero() && dot(lo_, u) >= Rat(0);
    return cross(lo_, u) >= Rat(0) && cross(u, hi_) >= Rat(0);
}

bool ConeQ2::strictly_interior(const Vec2Q& u) const {
    if (dim_ < 2) return false;
    return cross(lo_, u) > Rat(0) && cross(u, hi_) > Rat(0);
}

std::vector<std::pair<long long, long long>> support_vectors(const FamilyPoint& p) {
    std::vector<std::pair<long long, long long>> v;
    if (!p.a.is_zero()) v.push_back({-1, -1});
    for (long j = 0; j <= p.n + 3; ++j)
        if (!p.ai[j].is_zero()) v.push_back({j - 1, -2});
    return v;
}

ConeQ2 support_cone(const FamilyPoint& p) {
    std::vector<Vec2Q> gens;
    for (auto [d, b] : support_vectors(p)) gens.push_back({Rat(d), Rat(b)});
    return ConeQ2::from_generators(gens);
}

Rat domain_end(long n) {
    if (n < 1) throw std::domain_error("n must be a positive integer");
    return Rat(n + 5, 2 * n + 6);  // = (2l+5)/(4l+6) at n = 2l
}

Vec2Q git_u_vector(long n, const Rat& w) {
    if (!(Rat(0) < w) || !(w < domain_end(n)))
        throw std::domain_error("w outside the coefficient domain");
    if (n % 2) {
        return {(Rat(1 - n) + Rat(2 * n) * w) / Rat(6),
                (Rat(2 * n + 1) - w * Rat(4 * n + 6)) / Rat(3 * (n + 2))};
    }
    long l = n / 2;
    return {(Rat(1 - 2 * l) + Rat(4 * l) * w) / Rat(6),
            (Rat(4 * l + 1) - w * Rat(8 * l + 6)) / Rat(6 * (l + 1))};
}

Rat git_beta(long n, const Rat& w, const OneParamSubgroup& lam) {
    if (lam.d == 0 && lam.b == 0) throw std::domain_error("trivial one-parameter subgroup");
    Vec2Q u = git_u_vector(n, w);
    return u.x * Rat(lam.d) + u.y * Rat(lam.b);
}

GitVerdict git_classify(const FamilyPoint& p, const Rat& w) {
    Vec2Q u = git_u_vector(p.n, w);
    ConeQ2 cone = support_cone(p);
    GitVerdict v;

    if (cone.dimension() == 0) {  // zero point: unstable by convention
        v.witness = primitive_ops({-u.x, -u.y});
        return v;
    }
    if (!cone.contains(u)) {
        const Vec2Q& lo = cone.ray_lo();
        const Vec2Q& hi = cone.ray_hi();
        if (cone.dimension() == 1) {
            if (cross(lo, u).is_zero()) {
                v.witness = primitive_ops(lo);  // u on the opposite ray
            } else {
                Vec2Q nrm{-lo.y, lo.x};
                if (dot(nrm, u) > Rat(0)) nrm = {lo.y, -lo.x};
                v.witness = primitive_ops(nrm);
            }
        } else if (cross(lo, u) < Rat(0)) {
            v.witness = primitive_ops({-lo.y, lo.x});
        } else {
            v.witness = primitive_ops({hi.y, -hi.x});
        }
        return v;
    }

    v.semistable = true;
    if (cone.dimension() == 1) {
        v.polystable = true;  // u on the single generating ray
    } else if (cone.strictly_interior(u)) {
        v.polystable = true;
    } else {
        // u on a boundary ray: the normal pairing to zero realizes the
        // polystable degeneration.
        const Vec2Q& r = cross(cone.ray_lo(), u).is_zero() ? cone.ray_lo() : cone.ray_hi();
        Vec2Q nrm = cross(cone.ray_lo(), u).is_zero() ? Vec2Q{-r.y, r.x} : Vec2Q{r.y, -r.x};
        v.witness = primitive_ops(nrm);
    }
    return v;
}

GitVerdict brute_force_git_oracle(const FamilyPoint& p, const Rat& w, int N) {
    if (N < 1) throw std::domain_error("sweep radius must be positive");
    Vec2Q u = git_u_vector(p.n, w);
    auto gens = support_vectors(p);
    GitVerdict v;
    if (gens.empty()) {
        v.witness = primitive_ops({-u.x, -u.y});
        return v;
    }

    // beta * q = p1*d + p2*b with q > 0; only the sign matters.
    BigInt q = boost::multiprecision::lcm(u.x.den(), u.y.den());
    BigInt p1 = u.x.num() * (q / u.x.den());
    BigInt p2 = u.y.num() * (q / u.y.den());

    v.semistable = true;
    v.polystable = true;
    for (long long d = -N; d <= N && v.semistable; ++d) {
        for (long long b = -N; b <= N; ++b) {
            if (d == 0 && b == 0) continue;
            bool limit_exists = true;
            bool fixes_support = true;
            for (auto [gd, gb] : gens) {
                long long pairing = d * gd + b * gb;
                if (pairing < 0) {
                    limit_exists = false;
                    break;
                }
                if (pairing > 0) fixes_support = false;
            }
            if (!limit_exists) continue;
            BigInt beta_num = p1 * d + p2 * b;
            if (beta_num < 0) {
                v.semistable = false;
                v.polystable = false;
                v.witness = OneParamSubgroup{d, b};
                break;
            }
            if (beta_num == 0 && !fixes_support) {
                // limit leaves the orbit along a beta = 0 direction
                if (v.polystable) {
                    v.polystable = false;
                    v.witness = OneParamSubgroup{d, b};
                }
            }
        }
    }
    if (!v.semistable) v.polystable = false;
    return v;
}

Rat wall_value(long n, long i) {
    return Rat(BigInt(n + 2) * (n + 2) - BigInt(2 * n + 1) * i,
               BigInt(n + 2) * (2 * n + 6) - BigInt(4 * n + 6) * i);
}

Rat wall_value_alt(long n, long i) {
    if (n % 2) {
        Rat num = Rat(n + 2 + i) * Rat(n + 5) - Rat(3 * (n + 2)) * Rat(1 + i);
        Rat den = Rat(n + 2 + i) * Rat(2 * n + 6) - Rat(6 * i) * Rat(n + 2);
        return num / den;
    }
    long l = n / 2;
    Rat num = (Rat(l + 3) - Rat(1, 2)) * Rat(2 * l + 2 + i) - Rat(3 * (l + 1)) * Rat(1 + i);
    Rat den = Rat(2 * l + 3) * Rat(2 * l + 2 + i) - Rat(6 * i) * Rat(l + 1);
    return num / den;
}

Rat xi_value(long n) {
    if (n % 2) {
        BigInt nn(n);
        return Rat(nn * nn * nn + 11 * nn * nn + 31 * nn + 23,
                   2 * nn * nn * nn + 18 * nn * nn + 50 * nn + 42);
    }
    long l = n / 2;
    BigInt ll(l);
    return Rat(2 * ll * ll + 8 * ll + 3, 4 * ll * ll + 12 * ll + 6);
}

long last_wall_index(long n) { return n % 2 ? (n + 1) / 2 : n / 2 + 1; }

std::vector<Rat> WallSchedule::git_walls() const {
    std::vector<Rat> v;
    for (size_t i = 0; i + 1 < walls.size(); ++i) v.push_back(walls[i].second);
    return v;
}

WallSchedule enumerate_walls(long n) {
    if (n < 1) throw std::domain_error("n must be a positive integer");
    WallSchedule s;
    s.n = n;
    s.domain_end = domain_end(n);
    for (long i = 0; i <= last_wall_index(n); ++i)
        s.walls.push_back({"w" + std::to_string(i), wall_value(n, i)});
    s.walls.push_back({"xi", xi_value(n)});
    for (size_t i = 0; i + 1 < s.walls.size(); ++i)
        if (!(s.walls[i].second < s.walls[i + 1].second))
            throw std::logic_error("wall schedule not strictly increasing");
    if (!(s.xi() > Rat(1, 2)) || !(s.xi() < s.domain_end))
        throw std::logic_error("xi outside (1/2, domain end)");
    return s;
}

Stratum stratum_description(long n, const Rat& w) {
    if (!(Rat(0) < w) || !(w < domain_end(n)))
        throw std::domain_error("w outside the coefficient domain");
    WallSchedule sched = enumerate_walls(n);
    auto git = sched.git_walls();
    Stratum st;
    if (w < git[0]) {
        st.kind = Stratum::Kind::empty_below;
        st.index = -1;
        st.lo = Rat(0);
        st.hi = git[0];
        return st;
    }
    for (long i = 0; i < static_cast<long>(git.size()); ++i) {
        if (w == git[i]) {
            st.kind = Stratum::Kind::wall;
            st.index = i;
            st.lo = st.hi = w;
            st.pinned = n + 3 - i;
            st.lower_end = n + 2 - i;
            st.upper_start = n + 4 - i;
            return st;
        }
    }
    long i = 0;
    while (i + 1 < static_cast<long>(git.size()) && git[i + 1] < w) ++i;
    st.kind = Stratum::Kind::chamber;
    st.index = i;
    st.lower_end = n + 2 - i;
    st.upper_start = n + 3 - i;
    st.lo = git[i];
    st.hi = i + 1 < static_cast<long>(git.size()) ? git[i + 1] : sched.domain_end;
    if (i + 1 == static_cast<long>(git.size())) {
        // xi is a K-wall, not a GIT wall; it still subdivides the reported
        // interval of the last chamber.
        if (w < sched.xi()) st.hi = sched.xi();
        else if (w > sched.xi()) st.lo = sched.xi();
    }
    return st;
}

FamilyPoint apply_torus(const FamilyPoint& p, const Rat& s1, const Rat& s2) {
    if (s1.is_zero() || s2.is_zero()) throw std::domain_error("torus factors must be nonzero");
    Rat a = p.a / (s1 * s2);
    std::vector<Rat> ai(p.ai.size());
    Rat s2sq = s2 * s2;
    for (long j = 0; j <= p.n + 3; ++j) ai[j] = p.ai[j] * s1.pow(j - 1) / s2sq;
    return FamilyPoint(p.n, a, std::move(ai));
}

std::optional<FamilyPoint> one_ps_limit(const FamilyPoint& p, const OneParamSubgroup& lam) {
    // lambda(t).a = t^{-d-b} a, lambda(t).a_j = t^{(j-1)d-2b} a_j.
    long long ea = -lam.d - lam.b;
    if (!p.a.is_zero() && ea < 0) return std::nullopt;
    for (long j = 0; j <= p.n + 3; ++j)
        if (!p.ai[j].is_zero() && (j - 1) * lam.d - 2 * lam.b < 0) return std::nullopt;
    Rat a = ea == 0 ? p.a : Rat(0);
    std::vector<Rat> ai(p.ai.size());
    for (long j = 0; j <= p.n + 3; ++j)
        ai[j] = ((j - 1) * lam.d - 2 * lam.b == 0) ? p.ai[j] : Rat(0);
    return FamilyPoint(p.n, a, std::move(ai));
}

std::pair<Rat, bool> cm_degree(long n, const Rat& w) {
    Rat beta;
    if (n % 2) {
        beta = (w * Rat(4 * n + 6) - Rat(2 * n + 1)) / Rat(3 * (n + 2));
    } else {
        long l = n / 2;
        beta = (w * Rat(8 * l + 6) - Rat(4 * l + 1)) / Rat(6 * (l + 1));
    }
    return {beta, w > Rat(2 * n + 1, 4 * n + 6)};
}

}  // namespace kwall
