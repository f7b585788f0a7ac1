#pragma once

#include "lozi/quadext.hpp"
#include "lozi/symbol.hpp"

#include <array>
#include <memory>
#include <string_view>
#include <utility>

namespace lozi {

struct PlanePoint {
    QuadExt x;
    QuadExt y;

    friend bool operator==(const PlanePoint& p, const PlanePoint& q) {
        return p.x == q.x && p.y == q.y;
    }
    friend bool operator!=(const PlanePoint& p, const PlanePoint& q) { return !(p == q); }
};

/// Map parameters a, b together with the quadratic field context for
/// D = a^2 + 4b, the discriminant of the fixed-point equation on the
/// positive branch.
///
/// Construction domain: a > 1 and 0 < b < 1. Parameters there may still lie
/// outside the set S of hyperbolicity conditions; in_s() reports membership
/// and callers decide how loudly to warn.
class Params {
public:
    Params(const Rational& a, const Rational& b);
    static Params parse(std::string_view a_text, std::string_view b_text);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const std::shared_ptr<const QuadField>& field() const { return field_; }
    bool in_s() const { return in_s_; }

    /// Lift a rational into this parameter set's field context.
    QuadExt q(const Rational& r) const { return field_->value(r); }
    QuadExt q(long n) const { return field_->value(Rational(n)); }

private:
    Rational a_;
    Rational b_;
    std::shared_ptr<const QuadField> field_;
    bool in_s_ = false;
};

/// Membership in the parameter set S:
///   b > 0, a > 0, 2a^2 > (b+2)^2, b < (a^2-1)/(2a+1), 2a + b < 4.
/// All inequalities strict, evaluated exactly.
bool in_set_s(const Rational& a, const Rational& b);

/// (x, y) -> (1 + y - a|x|, bx).
PlanePoint lozi_apply(const Params& p, const PlanePoint& pt);
/// Exact inverse (x, y) -> (y/b, x - 1 + a|y/b|), so that
/// apply(inverse(P)) = inverse(apply(P)) = P.
PlanePoint lozi_inverse(const Params& p, const PlanePoint& pt);

/// Hyperbolic fixed points: X in the right half-plane, Y in the left.
std::pair<PlanePoint, PlanePoint> fixed_points(const Params& p);
/// First intersection of the unstable half-manifold of X with the positive
/// horizontal axis: Z = ((2 + a + sqrt(D)) / (2(1 + a - b)), 0).
PlanePoint point_z(const Params& p);
/// G_0 = lozi_inverse(Z), the anchor gluing point on the y axis.
PlanePoint point_g0(const Params& p);

/// Vertices of the trapping triangle: Z, L(Z), L^2(Z).
/// Throws DomainError when they are collinear.
std::array<PlanePoint, 3> trapping_triangle(const Params& p);

/// Exact check that L maps the triangle Z, L(Z), L^2(Z) into itself:
/// the triangle is split along the y axis, each half is mapped affinely and
/// every image vertex is tested for containment (boundary counts as inside).
bool trapping_check(const Params& p);

/// Signs of the x coordinates of P, L(P), ..., L^{n-1}(P).
/// An exact axis hit yields Sym::axis; the caller decides how to branch.
SymbolWord orbit_itinerary(const Params& p, PlanePoint pt, int n);

} // namespace lozi
