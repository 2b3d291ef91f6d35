#pragma once

// Real-point sampling of plane curves in x1, x2 and deterministic emission of
// the samples as CSV rows or an SVG dot plot.

#include <string>
#include <vector>

#include "poly.hpp"

namespace conchoid {

struct PlotWindow {
    Rational x_min, x_max, y_min, y_max;
};

struct PlotCurve {
    Poly curve;
    std::string style; // tag; equal tags share a palette color in the SVG
};

struct PlotSpec {
    std::vector<PlotCurve> curves;
    PlotWindow window;
    int resolution = 400; // sample columns (and rows, for vertical lines) per axis
};

// Exact coordinates of one sampled curve point; x is a grid column, y the
// midpoint of an isolation interval of width at most 10^-9.
struct PlotPoint {
    Rational x, y;
};

// For each of `resolution` evenly spaced rational columns x0 in the window,
// isolates the real roots of p(x0, x2) by Sturm bisection and emits their
// midpoints, sorted by (x, y).  A column where p vanishes identically (a
// vertical line) contributes the full row grid instead.  Roots outside the
// window's y range are kept; the window only drives the grid and the SVG
// mapping.  Constant p yields no points.
std::vector<PlotPoint> sample_real_points(const Poly& p, const PlotSpec& spec);

// Round-to-nearest fixed decimal with nine fractional digits; the shared
// number format of both emitters, chosen so output is byte-stable.
std::string fixed_decimal(const Rational& r);

// One row per point: `curve,x,y` with the curve's index in the PlotSpec.
std::string emit_csv(const PlotSpec& spec,
                     const std::vector<std::vector<PlotPoint>>& points_per_curve);

// 800x800 document; each point becomes one dot marker mapped from the window,
// colored by style tag from a fixed palette.  No joining between samples.
std::string emit_svg(const PlotSpec& spec,
                     const std::vector<std::vector<PlotPoint>>& points_per_curve);

} // namespace conchoid
