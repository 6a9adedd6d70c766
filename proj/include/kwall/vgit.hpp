#pragma once

// Variation-of-GIT engine for the two-torus acting on the coefficient space
// of the curve families. Stability of a coefficient point is membership of
// the character vector u(w) in the cone spanned by the support weights;
// walls are the w where u(w) crosses a support ray.

#include "kwall/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kwall {

enum class Parity { odd, even };

// Coefficient point (a, a_0, ..., a_{n+3}) of the degree-2(n+3) family.
// n odd: curves z^2 y + a z x^{n+4} + sum a_i x^{2n+6-2i} y^i on P(1,2,n+2);
// n = 2l even: z^2 y + a z u^{l+2} + sum a_i u^{2l+3-i} y^i on P(1,1,l+1).
struct FamilyPoint {
    long n = 1;
    Rat a;
    std::vector<Rat> ai;  // length n+4, indices 0..n+3

    FamilyPoint(long n_, Rat a_, std::vector<Rat> ai_);

    Parity parity() const { return n % 2 ? Parity::odd : Parity::even; }
    long l() const { return n / 2; }

    bool all_ai_zero() const;
    bool is_zero() const { return a.is_zero() && all_ai_zero(); }
    // Largest index with a_i != 0; empty when all a_i vanish.
    std::optional<long> t() const;
    // min{i >= 1 : a_i != 0} - 1, defined when a = a_0 = 0 and some a_i != 0.
    std::optional<long> m0() const;
};

struct OneParamSubgroup {
    long long d = 0, b = 0;  // != (0,0)
    friend bool operator==(const OneParamSubgroup& x, const OneParamSubgroup& y) {
        return x.d == y.d && x.b == y.b;
    }
};

struct Vec2Q {
    Rat x, y;
};

inline Rat cross(const Vec2Q& a, const Vec2Q& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec2Q& a, const Vec2Q& b) { return a.x * b.x + a.y * b.y; }

// Finitely generated cone in Q^2. All cones arising here are spanned by
// rays in the open lower half-plane, so the angular spread is < pi and two
// extreme rays describe the cone exactly.
class ConeQ2 {
  public:
    static ConeQ2 from_generators(std::vector<Vec2Q> gens);

    int dimension() const { return dim_; }
    const std::vector<Vec2Q>& generators() const { return rays_; }

    bool contains(const Vec2Q& u) const;
    // Topological interior; empty unless the cone is 2-dimensional.
    bool strictly_interior(const Vec2Q& u) const;

    // Extreme rays, clockwise-most first; valid when dimension >= 1.
    const Vec2Q& ray_lo() const { return lo_; }
    const Vec2Q& ray_hi() const { return hi_; }

  private:
    std::vector<Vec2Q> rays_;  // deduplicated primitive directions
    Vec2Q lo_, hi_;
    int dim_ = 0;
};

// Support vectors of a point: (-1,-1) for a, (j-1,-2) for a_j.
ConeQ2 support_cone(const FamilyPoint& p);
std::vector<std::pair<long long, long long>> support_vectors(const FamilyPoint& p);

Rat domain_end(long n);  // (n+5)/(2n+6) odd, (2l+5)/(4l+6) even

// Character vector of the CM linearization: beta^w_{(d,b)} = u(w).(d,b).
Vec2Q git_u_vector(long n, const Rat& w);
Rat git_beta(long n, const Rat& w, const OneParamSubgroup& lam);

struct GitVerdict {
    bool semistable = false;
    bool polystable = false;
    // Destabilizing 1-PS when unstable; boundary-realizing one when
    // strictly semistable.
    std::optional<OneParamSubgroup> witness;
};

GitVerdict git_classify(const FamilyPoint& p, const Rat& w);

// Independent oracle: sweeps all (d,b) in [-N,N]^2 \ {0}, applies the
// limit-existence test coefficientwise and the Hilbert-Mumford sign rule.
GitVerdict brute_force_git_oracle(const FamilyPoint& p, const Rat& w, int N);

// Wall values. wall_value is the closed form
// ((n+2)^2 - (2n+1)i) / ((n+2)(2n+6) - (4n+6)i); wall_value_alt the
// equivalent published alternate form (both parities).
Rat wall_value(long n, long i);
Rat wall_value_alt(long n, long i);
Rat xi_value(long n);
long last_wall_index(long n);  // (n+1)/2 odd, l+1 even

struct WallSchedule {
    long n;
    std::vector<std::pair<std::string, Rat>> walls;  // w0..wk then xi
    Rat domain_end;

    const Rat& xi() const { return walls.back().second; }
    // Interior GIT walls (excludes xi).
    std::vector<Rat> git_walls() const;
};

WallSchedule enumerate_walls(long n);

// Chamber/wall stratum of a given w, with the coefficient-block conditions
// that cut out the (semi/poly)stable locus there.
struct Stratum {
    enum class Kind { empty_below, chamber, wall };
    Kind kind;
    long index;  // wall index, or lower-wall index of the chamber
    Rat lo, hi;  // enclosing interval (walls: lo == hi)

    // Chamber: semistable iff blocks {a, a_0..a_{lower_end}} and
    // {a_{upper_start}..a_{n+3}} are both not all zero (then polystable).
    // Wall: branch 1 additionally allows a_{pinned} arbitrary between the
    // blocks; branch 2 is the single monomial a_{pinned} != 0.
    long lower_end = -1;
    long upper_start = -1;
    std::optional<long> pinned;
};

Stratum stratum_description(long n, const Rat& w);

// Degree of the descended CM bundle: beta^w_{(0,-1)}, ample iff positive,
// i.e. iff w > (2n+1)/(4n+6).
std::pair<Rat, bool> cm_degree(long n, const Rat& w);

// Torus action on coefficient points: (s1,s2).(a, a_j) =
// (s1^-1 s2^-1 a, s1^{j-1} s2^-2 a_j).
FamilyPoint apply_torus(const FamilyPoint& p, const Rat& s1, const Rat& s2);

// Limit of lambda(t).p as t -> 0 when it exists: coefficients on which the
// pairing is positive die, zero-pairing ones survive.
std::optional<FamilyPoint> one_ps_limit(const FamilyPoint& p, const OneParamSubgroup& lam);

}  // namespace kwall
