#include "lozi/attractor.hpp"

#include "lozi/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace lozi {

RasterBounds triangle_bounds(const Params& p) {
    const auto tri = trapping_triangle(p);
    RasterBounds b;
    b.xmin = b.xmax = tri[0].x.to_double();
    b.ymin = b.ymax = tri[0].y.to_double();
    for (const auto& v : tri) {
        b.xmin = std::min(b.xmin, v.x.to_double());
        b.xmax = std::max(b.xmax, v.x.to_double());
        b.ymin = std::min(b.ymin, v.y.to_double());
        b.ymax = std::max(b.ymax, v.y.to_double());
    }
    return b;
}

Raster render_attractor(const Params& p, const RasterOptions& opt) {
    if (opt.width < 1 || opt.height < 1) throw DomainError("raster dimensions must be positive");
    if (opt.iterations <= opt.transient) {
        throw DomainError("iterations must exceed the transient count");
    }

    Raster r;
    r.width = opt.width;
    r.height = opt.height;
    r.bounds = opt.use_default_bounds ? triangle_bounds(p) : opt.bounds;
    if (!(r.bounds.xmax > r.bounds.xmin) || !(r.bounds.ymax > r.bounds.ymin)) {
        throw DomainError("raster bounds are empty");
    }
    r.counts.assign(static_cast<std::size_t>(r.width) * r.height, 0);

    const double a = p.a().to_double();
    const double b = p.b().to_double();
    const auto [X, Y] = fixed_points(p);
    (void)Y;
    double x = X.x.to_double() + 1e-4;
    double y = X.y.to_double();

    const double sx = r.width / (r.bounds.xmax - r.bounds.xmin);
    const double sy = r.height / (r.bounds.ymax - r.bounds.ymin);

    for (long i = 0; i < opt.iterations; ++i) {
        const double nx = 1.0 + y - a * std::abs(x);
        const double ny = b * x;
        x = nx;
        y = ny;
        if (std::abs(x) > 1e6 || std::abs(y) > 1e6) {
            throw DivergenceError("orbit diverged after " + std::to_string(i + 1) + " iterations");
        }
        if (i < opt.transient) continue;
        r.max_abs_coord = std::max({r.max_abs_coord, std::abs(x), std::abs(y)});
        if (x < r.bounds.xmin || x > r.bounds.xmax || y < r.bounds.ymin || y > r.bounds.ymax) {
            ++r.out_of_bounds;
            continue;
        }
        int col = static_cast<int>((x - r.bounds.xmin) * sx);
        int row = static_cast<int>((r.bounds.ymax - y) * sy);
        col = std::clamp(col, 0, r.width - 1);
        row = std::clamp(row, 0, r.height - 1);
        const std::size_t idx = static_cast<std::size_t>(row) * r.width + col;
        ++r.counts[idx];
        r.max_count = std::max(r.max_count, r.counts[idx]);
        ++r.plotted;
    }
    return r;
}

namespace {

int shade(std::uint32_t c, std::uint32_t max_count) {
    if (c == 0 || max_count == 0) return 0;
    const double v = std::log1p(static_cast<double>(c)) / std::log1p(static_cast<double>(max_count));
    return static_cast<int>(std::lround(v * 255.0));
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

void write_pgm(const Raster& r, std::ostream& os, const std::string& comment) {
    os << "P2\n";
    if (!comment.empty()) os << "# " << comment << "\n";
    os << r.width << " " << r.height << "\n255\n";
    for (int row = 0; row < r.height; ++row) {
        for (int col = 0; col < r.width; ++col) {
            if (col) os << ' ';
            os << shade(r.counts[static_cast<std::size_t>(row) * r.width + col], r.max_count);
        }
        os << '\n';
    }
}

void write_svg(const Raster& r, std::ostream& os, const std::string& comment) {
    const double cw = (r.bounds.xmax - r.bounds.xmin) / r.width;
    const double ch = (r.bounds.ymax - r.bounds.ymin) / r.height;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    if (!comment.empty()) os << "<!-- " << comment << " -->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << fmt(r.bounds.xmin) << " " << fmt(-r.bounds.ymax) << " "
       << fmt(r.bounds.xmax - r.bounds.xmin) << " " << fmt(r.bounds.ymax - r.bounds.ymin)
       << "\">\n";
    os << "<rect x=\"" << fmt(r.bounds.xmin) << "\" y=\"" << fmt(-r.bounds.ymax)
       << "\" width=\"" << fmt(r.bounds.xmax - r.bounds.xmin)
       << "\" height=\"" << fmt(r.bounds.ymax - r.bounds.ymin) << "\" fill=\"white\"/>\n";
    for (int row = 0; row < r.height; ++row) {
        for (int col = 0; col < r.width; ++col) {
            const std::uint32_t c = r.counts[static_cast<std::size_t>(row) * r.width + col];
            if (c == 0) continue;
            // SVG y grows downward; flip by negating y.
            const double x = r.bounds.xmin + col * cw;
            const double y = -(r.bounds.ymax - row * ch);
            const double op = shade(c, r.max_count) / 255.0;
            os << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y)
               << "\" width=\"" << fmt(cw) << "\" height=\"" << fmt(ch)
               << "\" fill=\"black\" fill-opacity=\"" << fmt(op) << "\"/>\n";
        }
    }
    os << "</svg>\n";
}

} // namespace lozi
