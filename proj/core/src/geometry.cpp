#include "lozi/geometry.hpp"

#include "lozi/error.hpp"

#include <vector>

namespace lozi {

Params::Params(const Rational& a, const Rational& b) : a_(a), b_(b) {
    if (!(a > Rational(1))) {
        throw DomainError("parameter a must satisfy a > 1, got " + a.str());
    }
    if (!(b > Rational(0) && b < Rational(1))) {
        throw DomainError("parameter b must satisfy 0 < b < 1, got " + b.str());
    }
    field_ = QuadField::make(a * a + Rational(4) * b);
    in_s_ = in_set_s(a, b);
}

Params Params::parse(std::string_view a_text, std::string_view b_text) {
    return Params(Rational::parse(a_text), Rational::parse(b_text));
}

bool in_set_s(const Rational& a, const Rational& b) {
    if (!(b > Rational(0))) return false;
    if (!(a > Rational(0))) return false;
    const Rational b2 = b + Rational(2);
    if (!(Rational(2) * a * a > b2 * b2)) return false;
    if (!(b < (a * a - Rational(1)) / (Rational(2) * a + Rational(1)))) return false;
    if (!(Rational(2) * a + b < Rational(4))) return false;
    return true;
}

PlanePoint lozi_apply(const Params& p, const PlanePoint& pt) {
    return {p.q(1) + pt.y - p.q(p.a()) * pt.x.abs(), p.q(p.b()) * pt.x};
}

PlanePoint lozi_inverse(const Params& p, const PlanePoint& pt) {
    QuadExt yb = pt.y / p.q(p.b());
    return {yb, pt.x - p.q(1) + p.q(p.a()) * yb.abs()};
}

std::pair<PlanePoint, PlanePoint> fixed_points(const Params& p) {
    const Rational dx = Rational(1) + p.a() - p.b();
    const Rational dy = p.a() + p.b() - Rational(1);
    PlanePoint X{p.q(Rational(1) / dx), p.q(p.b() / dx)};
    PlanePoint Y{p.q(Rational(-1) / dy), p.q(-p.b() / dy)};
    return {X, Y};
}

PlanePoint point_z(const Params& p) {
    const Rational den = Rational(2) * (Rational(1) + p.a() - p.b());
    QuadExt zx((Rational(2) + p.a()) / den, Rational(1) / den, p.field());
    return {zx, p.q(0)};
}

PlanePoint point_g0(const Params& p) {
    return lozi_inverse(p, point_z(p));
}

namespace {

QuadExt cross(const PlanePoint& o, const PlanePoint& a, const PlanePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Clip a convex polygon to one closed half-plane: side=+1 keeps x >= 0,
// side=-1 keeps x <= 0. Vertices on the axis are kept by both.
std::vector<PlanePoint> clip_halfplane(const std::vector<PlanePoint>& poly, int side) {
    std::vector<PlanePoint> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const PlanePoint& A = poly[i];
        const PlanePoint& B = poly[(i + 1) % n];
        const int sa = A.x.sign() * side;
        const int sb = B.x.sign() * side;
        if (sa >= 0) out.push_back(A);
        if ((sa > 0 && sb < 0) || (sa < 0 && sb > 0)) {
            QuadExt t = A.x / (A.x - B.x);
            out.push_back({A.x - A.x, A.y + t * (B.y - A.y)});
        }
    }
    return out;
}

} // namespace

std::array<PlanePoint, 3> trapping_triangle(const Params& p) {
    PlanePoint Z = point_z(p);
    PlanePoint LZ = lozi_apply(p, Z);
    PlanePoint LLZ = lozi_apply(p, LZ);
    if (cross(Z, LZ, LLZ).sign() == 0) {
        throw DomainError("degenerate trapping triangle: Z, L(Z), L^2(Z) are collinear");
    }
    return {Z, LZ, LLZ};
}

bool trapping_check(const Params& p) {
    const auto tri = trapping_triangle(p);
    const int orient = cross(tri[0], tri[1], tri[2]).sign();

    auto inside = [&](const PlanePoint& P) {
        for (int i = 0; i < 3; ++i) {
            const int s = cross(tri[i], tri[(i + 1) % 3], P).sign();
            if (s != 0 && s != orient) return false;
        }
        return true;
    };

    // The map is affine on each closed half-plane, so each clipped piece maps
    // to the convex hull of its image vertices; containment of the vertices
    // is containment of the piece.
    const std::vector<PlanePoint> whole(tri.begin(), tri.end());
    for (int side : {+1, -1}) {
        for (const PlanePoint& v : clip_halfplane(whole, side)) {
            if (!inside(lozi_apply(p, v))) return false;
        }
    }
    return true;
}

SymbolWord orbit_itinerary(const Params& p, PlanePoint pt, int n) {
    if (n < 1) throw DomainError("itinerary length must be at least 1");
    SymbolWord out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.push_back(static_cast<Sym>(pt.x.sign()));
        pt = lozi_apply(p, pt);
    }
    return out;
}

} // namespace lozi
