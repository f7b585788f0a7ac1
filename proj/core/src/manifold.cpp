#include "lozi/manifold.hpp"

#include "lozi/error.hpp"

#include <climits>
#include <random>
#include <sstream>

namespace lozi {

Label Label::image() const {
    if (kind == Kind::gluing) return turning(-n, 1);
    return turning(n, j + 1);
}

std::string Label::str() const {
    std::ostringstream os;
    os << (kind == Kind::gluing ? "G_" : "T_") << n;
    if (kind == Kind::turning && j > 1) os << "^" << j;
    return os.str();
}

Label Label::parse(std::string_view text) {
    if (text.size() < 3 || (text[0] != 'G' && text[0] != 'T') || text[1] != '_') {
        throw ParseError("malformed point label: \"" + std::string(text) + "\"");
    }
    const bool gluing = text[0] == 'G';
    std::string body(text.substr(2));
    long n = 0;
    int j = 1;
    const auto caret = body.find('^');
    try {
        if (caret != std::string::npos) {
            if (gluing) throw ParseError("gluing labels carry no exponent");
            j = std::stoi(body.substr(caret + 1));
            body.resize(caret);
        }
        n = std::stol(body);
    } catch (const std::logic_error&) {
        throw ParseError("malformed point label: \"" + std::string(text) + "\"");
    }
    if (j < 1) throw ParseError("label exponent must be at least 1");
    return gluing ? Label::gluing(n) : Label::turning(n, j);
}

namespace {

constexpr long k_unnumbered = LONG_MIN;

} // namespace

ManifoldWindow ManifoldWindow::grow(const Params& p, int depth) {
    if (depth < 1) throw DomainError("window depth must be at least 1");
    if (depth > k_max_depth) {
        throw DomainError("window depth guard exceeded: " + std::to_string(depth) + " > " +
                          std::to_string(k_max_depth));
    }

    ManifoldWindow w(p);
    w.depth_ = depth;
    const PlanePoint Z = point_z(p);
    const PlanePoint G0 = point_g0(p);
    w.pts_ = {{G0, Label::gluing(0)}, {Z, Label::turning(0, 1)}};
    w.arcs_ = {BasicArc{{}, Sym::plus, 0}};
    w.e0_ = 0;

    for (int step = 0; step < depth; ++step) {
        const std::size_t n = w.pts_.size();
        std::vector<PlanePoint> imgs;
        imgs.reserve(n);
        for (const auto& bp : w.pts_) imgs.push_back(lozi_apply(p, bp.coords));

        std::vector<BasicPoint> np;
        std::vector<BasicArc> na;
        std::vector<long> image_vec(n, -1);
        np.reserve(2 * n);
        na.reserve(2 * n);

        // L reverses orientation along the manifold, so emit images in
        // reverse and cut each image segment at its y-axis crossing.
        for (std::size_t ii = n; ii-- > 0;) {
            np.push_back({imgs[ii], w.pts_[ii].label.image()});
            image_vec[ii] = static_cast<long>(np.size()) - 1;
            if (ii == 0) break;
            const PlanePoint& A = imgs[ii];
            const PlanePoint& B = imgs[ii - 1];
            const int sa = A.x.sign();
            const int sb = B.x.sign();
            if (sa == 0 && sb == 0) {
                throw GrowthError("degenerate image segment inside the y axis at step " +
                                  std::to_string(step + 1));
            }
            const long parent_e = static_cast<long>(ii) - 1 - w.e0_;
            if (sa * sb == -1) {
                QuadExt t = A.x / (A.x - B.x);
                PlanePoint g{A.x - A.x, A.y + t * (B.y - A.y)};
                na.push_back(BasicArc{{}, Sym::plus, parent_e});
                np.push_back({g, Label::gluing(k_unnumbered)});
            }
            na.push_back(BasicArc{{}, Sym::plus, parent_e});
        }
        if (na.size() + 1 != np.size()) throw GrowthError("internal: arc/point count mismatch");

        // Signs and codes. The code extends the parent's code by the arc's
        // sign, except that the central child of arc 0 stays arc 0.
        for (std::size_t k = 0; k < na.size(); ++k) {
            int s = np[k].coords.x.sign();
            if (s == 0) s = np[k + 1].coords.x.sign();
            if (s == 0) throw GrowthError("internal: arc with both endpoints on the y axis");
            na[k].sign = static_cast<Sym>(s);
            const std::size_t parent_vec = static_cast<std::size_t>(na[k].parent_e + w.e0_);
            if (na[k].parent_e == 0 && s > 0) {
                na[k].code.clear();
            } else {
                na[k].code = w.arcs_[parent_vec].code;
                na[k].code.push_back(na[k].sign);
            }
        }

        // Number the gluing points by position, anchored at the crossing
        // that coincides with G_0.
        long anchor = -1;
        std::vector<long> gluing_idx;
        for (std::size_t k = 0; k < np.size(); ++k) {
            if (np[k].label.kind != Label::Kind::gluing) continue;
            gluing_idx.push_back(static_cast<long>(k));
            if (np[k].coords == G0) anchor = static_cast<long>(gluing_idx.size()) - 1;
        }
        if (anchor < 0) throw GrowthError("internal: anchor gluing point G_0 not recreated");
        for (std::size_t k = 0; k < gluing_idx.size(); ++k) {
            np[static_cast<std::size_t>(gluing_idx[k])].label =
                Label::gluing(static_cast<long>(k) - anchor);
        }
        const long new_e0 = gluing_idx[static_cast<std::size_t>(anchor)];
        if (np[static_cast<std::size_t>(new_e0) + 1].label != Label::turning(0, 1)) {
            throw GrowthError("internal: T_0 not adjacent to G_0 after growth");
        }

        w.orbit_.clear();
        for (std::size_t ii = 0; ii < n; ++ii) {
            w.orbit_[static_cast<long>(ii) - w.e0_] = image_vec[ii] - new_e0;
        }
        w.pts_ = std::move(np);
        w.arcs_ = std::move(na);
        w.e0_ = new_e0;
    }
    return w;
}

const BasicPoint& ManifoldWindow::point(long e) const {
    if (e < e_min() || e > e_max()) {
        throw DomainError("point index E_" + std::to_string(e) + " outside the window");
    }
    return pts_[static_cast<std::size_t>(e + e0_)];
}

const BasicArc& ManifoldWindow::arc(long e) const {
    if (e < e_min() || e >= e_max()) {
        throw DomainError("arc index " + std::to_string(e) + " outside the window");
    }
    return arcs_[static_cast<std::size_t>(e + e0_)];
}

std::optional<long> ManifoldWindow::orbit_image(long e) const {
    const auto it = orbit_.find(e);
    if (it == orbit_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::pair<long, long>> ManifoldWindow::children(long e) const {
    const auto lo = orbit_.find(e + 1);
    const auto hi = orbit_.find(e);
    if (lo == orbit_.end() || hi == orbit_.end()) return std::nullopt;
    return std::pair<long, long>{lo->second, hi->second - 1};
}

std::optional<long> ManifoldWindow::find_point(const PlanePoint& q) const {
    for (std::size_t k = 0; k < pts_.size(); ++k) {
        if (pts_[k].coords == q) return static_cast<long>(k) - e0_;
    }
    return std::nullopt;
}

WindowPoint ManifoldWindow::make_point(long arc_e, const Rational& t) const {
    if (arc_e < e_min() || arc_e >= e_max()) {
        throw DomainError("arc index " + std::to_string(arc_e) + " outside the window");
    }
    if (t < Rational(0) || t > Rational(1)) {
        throw DomainError("arc parameter " + t.str() + " outside [0, 1]");
    }
    return {arc_e, t};
}

PlanePoint ManifoldWindow::coords(const WindowPoint& wp) const {
    const BasicPoint& A = point(wp.arc_e);
    const BasicPoint& B = point(wp.arc_e + 1);
    const QuadExt t = params_.q(wp.t);
    return {A.coords.x + (B.coords.x - A.coords.x) * t,
            A.coords.y + (B.coords.y - A.coords.y) * t};
}

OrderResult ManifoldWindow::order_compare(const WindowPoint& p, const WindowPoint& q) const {
    // Normalizing to a single scalar handles the (arc, 1) = (arc+1, 0) alias.
    const Rational a = Rational(p.arc_e) + p.t;
    const Rational b = Rational(q.arc_e) + q.t;
    if (a == b) return OrderResult::equal;
    return a < b ? OrderResult::before : OrderResult::after;
}

Location ManifoldWindow::locate(const PlanePoint& q) const {
    if (auto e = find_point(q)) return {true, *e, QuadExt(Rational(0))};
    for (long e = e_min(); e < e_max(); ++e) {
        const PlanePoint& A = point(e).coords;
        const PlanePoint& B = point(e + 1).coords;
        const QuadExt dx = B.x - A.x;
        const QuadExt dy = B.y - A.y;
        const QuadExt cross = dx * (q.y - A.y) - dy * (q.x - A.x);
        if (cross.sign() != 0) continue;
        const QuadExt t = dx.sign() != 0 ? (q.x - A.x) / dx : (q.y - A.y) / dy;
        if (t.sign() <= 0 || (t - QuadExt(1)).sign() >= 0) continue;
        // Collinearity plus a matching parameter on one axis pins the other.
        return {false, e, t};
    }
    throw DomainError("point is not on the manifold window polyline");
}

ItinWindow ManifoldWindow::itinerary_window(const WindowPoint& wp, int horizon) const {
    if (horizon < 0) throw DomainError("itinerary horizon must be nonnegative");
    const BasicArc& a = arc(wp.arc_e);
    ItinWindow win;
    win.lo = 1 - static_cast<long>(a.code.size());
    win.syms = a.code;
    win.syms.reserve(a.code.size() + static_cast<std::size_t>(horizon));
    PlanePoint q = coords(wp);
    for (int h = 0; h < horizon; ++h) {
        q = lozi_apply(params_, q);
        win.syms.push_back(static_cast<Sym>(q.x.sign()));
    }
    return win;
}

std::vector<WindowPoint> ManifoldWindow::sample_points(int count, std::uint64_t seed,
                                                       int horizon) const {
    if (count < 1) throw DomainError("sample count must be at least 1");
    std::mt19937_64 rng(seed);
    const std::uint64_t n_arcs = arc_count();
    std::vector<WindowPoint> out;
    out.reserve(static_cast<std::size_t>(count));
    const long budget = 64L * count;
    for (long tries = 0; tries < budget && out.size() < static_cast<std::size_t>(count); ++tries) {
        const long e = e_min() + static_cast<long>(rng() % n_arcs);
        const Rational t(1 + static_cast<long>(rng() % 1023), 1024);
        WindowPoint wp{e, t};
        if (has_axis(itinerary_window(wp, horizon).syms)) continue;
        out.push_back(wp);
    }
    if (out.size() < static_cast<std::size_t>(count)) {
        throw DomainError("sampling exhausted its retry budget avoiding the y axis");
    }
    return out;
}

namespace {

QuadExt orient(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const PlanePoint& p, const PlanePoint& a, const PlanePoint& b) {
    // Assumes p collinear with a, b.
    return ((p.x - a.x) * (p.x - b.x)).sign() <= 0 &&
           ((p.y - a.y) * (p.y - b.y)).sign() <= 0;
}

bool segments_intersect(const PlanePoint& A, const PlanePoint& B, const PlanePoint& C,
                        const PlanePoint& D) {
    const int d1 = orient(C, D, A).sign();
    const int d2 = orient(C, D, B).sign();
    const int d3 = orient(A, B, C).sign();
    const int d4 = orient(A, B, D).sign();
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return true;
    }
    if (d1 == 0 && on_segment(A, C, D)) return true;
    if (d2 == 0 && on_segment(B, C, D)) return true;
    if (d3 == 0 && on_segment(C, A, B)) return true;
    if (d4 == 0 && on_segment(D, A, B)) return true;
    return false;
}

} // namespace

std::vector<std::pair<long, long>> ManifoldWindow::self_intersections() const {
    std::vector<std::pair<long, long>> out;
    for (long i = e_min(); i < e_max(); ++i) {
        for (long j = i + 2; j < e_max(); ++j) {
            if (segments_intersect(point(i).coords, point(i + 1).coords, point(j).coords,
                                   point(j + 1).coords)) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

} // namespace lozi
