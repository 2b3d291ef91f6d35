#include "render.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"
#include "realroots.hpp"

namespace conchoid {

namespace {

void check_window(const PlotSpec& spec) {
    if (!(spec.window.x_min < spec.window.x_max) ||
        !(spec.window.y_min < spec.window.y_max))
        throw DomainError("degenerate plot window");
    if (spec.resolution < 1) throw DomainError("plot resolution must be positive");
}

Rational grid_at(const Rational& lo, const Rational& hi, int steps, int k) {
    if (steps <= 1) return lo;
    return lo + (hi - lo) * Rational(k) / Rational(steps - 1);
}

} // namespace

std::vector<PlotPoint> sample_real_points(const Poly& p, const PlotSpec& spec) {
    check_window(spec);
    std::vector<PlotPoint> out;
    if (p.is_constant()) return out;

    bool has_x1 = p.ring().index_of(Var::x1) >= 0;
    const Rational width(1, 1000000000);
    for (int k = 0; k < spec.resolution; ++k) {
        Rational x0 = grid_at(spec.window.x_min, spec.window.x_max, spec.resolution, k);
        Poly column = has_x1 ? p.evaluate({{Var::x1, x0}}) : p;
        if (column.is_zero()) {
            // The whole vertical line lies on the curve; sample the row grid.
            for (int j = 0; j < spec.resolution; ++j)
                out.push_back({x0, grid_at(spec.window.y_min, spec.window.y_max,
                                           spec.resolution, j)});
            continue;
        }
        if (column.is_constant()) continue;
        for (Var v : column.ring().vars())
            if (v != Var::x2)
                if (column.degree_in(v) > 0)
                    throw DomainError("plot polynomial must live in x1, x2");
        SturmSequence sturm(column, Var::x2);
        for (const auto& [lo, hi] : sturm.isolate(width))
            out.push_back({x0, (lo + hi) / 2});
    }
    std::sort(out.begin(), out.end(), [](const PlotPoint& a, const PlotPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return out;
}

std::string fixed_decimal(const Rational& r) {
    Integer num = r.get_num();
    Integer den = r.get_den();
    bool negative = num < 0;
    if (negative) num = -num;
    Integer scale("1000000000");
    // Round half away from zero: floor((2*num*scale + den) / (2*den)).
    Integer q = (2 * num * scale + den) / (2 * den);
    Integer whole = q / scale;
    Integer frac = q % scale;
    std::string digits = frac.get_str();
    std::string text = (negative && q != 0 ? "-" : "") + whole.get_str() + "." +
                       std::string(9 - digits.size(), '0') + digits;
    return text;
}

std::string emit_csv(const PlotSpec& spec,
                     const std::vector<std::vector<PlotPoint>>& points_per_curve) {
    check_window(spec);
    if (points_per_curve.size() != spec.curves.size())
        throw DomainError("one point set per curve required");
    std::string out = "curve,x,y\n";
    for (std::size_t i = 0; i < points_per_curve.size(); ++i)
        for (const PlotPoint& pt : points_per_curve[i])
            out += std::to_string(i) + "," + fixed_decimal(pt.x) + "," +
                   fixed_decimal(pt.y) + "\n";
    return out;
}

std::string emit_svg(const PlotSpec& spec,
                     const std::vector<std::vector<PlotPoint>>& points_per_curve) {
    check_window(spec);
    if (points_per_curve.size() != spec.curves.size())
        throw DomainError("one point set per curve required");

    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                     "#9467bd", "#ff7f0e", "#8c564b"};
    constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);
    std::map<std::string, std::size_t> tag_color;
    for (const PlotCurve& c : spec.curves)
        tag_color.try_emplace(c.style, tag_color.size() % kPaletteSize);

    const Rational side(800);
    Rational x_span = spec.window.x_max - spec.window.x_min;
    Rational y_span = spec.window.y_max - spec.window.y_min;

    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
        "viewBox=\"0 0 800 800\">\n";
    for (std::size_t i = 0; i < points_per_curve.size(); ++i) {
        out += "<g fill=\"";
        out += kPalette[tag_color.at(spec.curves[i].style)];
        out += "\">\n";
        for (const PlotPoint& pt : points_per_curve[i]) {
            Rational cx = (pt.x - spec.window.x_min) * side / x_span;
            Rational cy = side - (pt.y - spec.window.y_min) * side / y_span;
            out += "<circle cx=\"" + fixed_decimal(cx) + "\" cy=\"" +
                   fixed_decimal(cy) + "\" r=\"1.5\"/>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace conchoid
