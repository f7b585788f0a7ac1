#pragma once

#include "lozi/geometry.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lozi {

/// Identity of a basic point on the unstable manifold window.
/// Gluing points G_n sit on the y axis; turning points and their forward
/// images T_n^j sit on the orbit of an axis crossing: T_n^1 = T_n = L(G_{-n})
/// and T_n^{j+1} = L(T_n^j).
struct Label {
    enum class Kind : char { gluing = 'G', turning = 'T' };

    Kind kind = Kind::turning;
    long n = 0;
    int j = 1;

    static Label gluing(long n) { return {Kind::gluing, n, 1}; }
    static Label turning(long n, int j) { return {Kind::turning, n, j}; }
    /// Label of the image point: L(G_n) = T_{-n}, L(T_n^j) = T_n^{j+1}.
    Label image() const;

    std::string str() const;
    static Label parse(std::string_view text);

    friend bool operator==(const Label& a, const Label& b) {
        return a.kind == b.kind && a.n == b.n && (a.kind == Kind::gluing || a.j == b.j);
    }
    friend bool operator!=(const Label& a, const Label& b) { return !(a == b); }
};

struct BasicPoint {
    PlanePoint coords;
    Label label;
};

/// Straight segment between consecutive basic points. Its interior stays in
/// one open half-plane; sign records which one. code is the arc's address
/// word: the unique alpha with L^{-|alpha|-1}(arc) inside [G_0, T_0].
struct BasicArc {
    SymbolWord code;
    Sym sign = Sym::plus;
    /// E-index of the arc one growth step up whose image contains this arc.
    long parent_e = 0;
};

/// A point on the window polyline, represented positionally: arc E-index
/// plus rational parameter in [0, 1] along the arc. (arc, 1) denotes the
/// same point as (arc + 1, 0).
struct WindowPoint {
    long arc_e = 0;
    Rational t;
};

enum class OrderResult { before, equal, after };

/// Result of locating a plane point on the window: either an exact basic
/// point (is_point, e) or an arc interior position (arc e, parameter t).
/// The parameter may leave the rationals when D is irrational, hence QuadExt.
struct Location {
    bool is_point = false;
    long e = 0;
    QuadExt t;
};

/// The depth-N unstable manifold window: the polyline L^N([G_0, T_0]) with
/// its basic points E_{e_min} .. E_{e_max} in the intrinsic order of the
/// manifold, E_0 = G_0 and E_1 = T_0 fixed anchors.
///
/// Growth is a full rebuild per step: every arc is mapped affinely (its
/// interior lies in one half-plane), image segments are split exactly at
/// interior y-axis crossings (new gluing points), image points keep their
/// orbit labels, and gluing numbers are reassigned by position relative to
/// G_0. Old points and arcs keep E-indices, labels, coordinates and codes;
/// each step only appends beyond the previous ends.
class ManifoldWindow {
public:
    /// depth >= 1; guarded at k_max_depth to keep memory bounded.
    static ManifoldWindow grow(const Params& p, int depth);
    static constexpr int k_max_depth = 32;

    const Params& params() const { return params_; }
    int depth() const { return depth_; }

    long e_min() const { return -e0_; }
    long e_max() const { return static_cast<long>(pts_.size()) - 1 - e0_; }
    std::size_t point_count() const { return pts_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }

    const BasicPoint& point(long e) const;
    /// Arc e = [E_e, E_{e+1}], for e in e_min() .. e_max()-1.
    const BasicArc& arc(long e) const;

    /// E-index of L(E_e); defined for points of the depth-1 subwindow.
    std::optional<long> orbit_image(long e) const;
    /// Ascending E-range [first, last] of the arcs covering L(arc e);
    /// empty when the image lies beyond the recorded window (frontier arcs).
    std::optional<std::pair<long, long>> children(long e) const;

    /// Exact coordinate lookup among basic points.
    std::optional<long> find_point(const PlanePoint& q) const;

    /// Validates the arc range and 0 <= t <= 1.
    WindowPoint make_point(long arc_e, const Rational& t) const;
    PlanePoint coords(const WindowPoint& wp) const;
    /// Intrinsic order of the polyline, boundary aliasing handled.
    OrderResult order_compare(const WindowPoint& p, const WindowPoint& q) const;

    /// Exact location of a plane point on the polyline.
    /// Throws DomainError when the point is not on it.
    Location locate(const PlanePoint& q) const;

    /// Deterministic points interior to arcs whose forward orbit avoids the
    /// y axis for `horizon` steps (checked exactly; bounded retries).
    std::vector<WindowPoint> sample_points(int count, std::uint64_t seed, int horizon) const;

    /// Itinerary window of a point: its arc code as the known left part
    /// (positions 1-|code| .. 0) followed by `horizon` exact forward signs.
    ItinWindow itinerary_window(const WindowPoint& wp, int horizon) const;

    /// Diagnostic: pairs of non-adjacent arcs that intersect. Empty for an
    /// embedded polyline. Quadratic in the number of arcs.
    std::vector<std::pair<long, long>> self_intersections() const;

private:
    explicit ManifoldWindow(const Params& p) : params_(p) {}

    Params params_;
    int depth_ = 0;
    std::vector<BasicPoint> pts_;
    std::vector<BasicArc> arcs_;       // arcs_[k] joins pts_[k], pts_[k+1]
    long e0_ = 0;                      // vector index of E_0
    std::map<long, long> orbit_;       // E-index -> E-index of the image
};

} // namespace lozi
