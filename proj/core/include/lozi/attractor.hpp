#pragma once

#include "lozi/geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lozi {

struct RasterBounds {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
};

/// Float bounding box of the trapping triangle Z, L(Z), L^2(Z).
RasterBounds triangle_bounds(const Params& p);

struct RasterOptions {
    long iterations = 200000;
    long transient = 1000;
    int width = 512;
    int height = 512;
    /// Default bounds: triangle_bounds(params).
    bool use_default_bounds = true;
    RasterBounds bounds;
};

/// Hit-count grid, row 0 at the top (largest y).
struct Raster {
    int width = 0;
    int height = 0;
    RasterBounds bounds;
    std::vector<std::uint32_t> counts;
    std::uint32_t max_count = 0;
    long plotted = 0;
    /// Post-transient points that fell outside the bounds (not binned).
    long out_of_bounds = 0;
    double max_abs_coord = 0;
};

/// The only float-mode computation in the library: iterate from a seed near
/// the fixed point X, discard the transient, bin the rest.
/// Throws DivergenceError when |x| or |y| exceeds 10^6.
Raster render_attractor(const Params& p, const RasterOptions& opt);

/// Plain portable graymap (P2), log-scaled to 0..255.
void write_pgm(const Raster& r, std::ostream& os, const std::string& comment);
/// One SVG rect per nonzero cell, opacity log-scaled.
void write_svg(const Raster& r, std::ostream& os, const std::string& comment);

} // namespace lozi
