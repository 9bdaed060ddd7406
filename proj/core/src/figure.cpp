#include "iwkin/figure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "iwkin/spectral.hpp"

namespace iwkin {

namespace {

constexpr double kWidth = 680.0, kHeight = 600.0;
constexpr double kLeft = 58.0, kRight = 20.0, kTop = 20.0, kBottom = 48.0;

struct Mapper {
    double x0, x1, y0, y1;
    double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
    double py(double y) const {
        return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom);
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

bool usable(const GridField& g, int ix, int iy) {
    return g.status_at(ix, iy) != IntegralStatus::Divergent;
}

// Marching squares: emits the segments of the iso-line {value == level} inside
// cells whose four corners are all usable.
void contour_segments(const GridField& g, double level, const Mapper& map, std::ostream& out) {
    const int nx = static_cast<int>(g.x_axis.size());
    const int ny = static_cast<int>(g.y_axis.size());
    for (int iy = 0; iy + 1 < ny; ++iy) {
        for (int ix = 0; ix + 1 < nx; ++ix) {
            if (!usable(g, ix, iy) || !usable(g, ix + 1, iy) || !usable(g, ix, iy + 1) ||
                !usable(g, ix + 1, iy + 1))
                continue;
            const double v00 = g.value_at(ix, iy) - level;
            const double v10 = g.value_at(ix + 1, iy) - level;
            const double v01 = g.value_at(ix, iy + 1) - level;
            const double v11 = g.value_at(ix + 1, iy + 1) - level;
            const double xa = g.x_axis[ix], xb = g.x_axis[ix + 1];
            const double ya = g.y_axis[iy], yb = g.y_axis[iy + 1];
            struct Pt {
                double x, y;
            };
            Pt pts[4];
            int npt = 0;
            auto cross = [&](double va, double vb, double pa_x, double pa_y, double pb_x,
                             double pb_y) {
                if ((va > 0.0) == (vb > 0.0) || va == vb)
                    return;
                const double t = va / (va - vb);
                pts[npt++] = {pa_x + t * (pb_x - pa_x), pa_y + t * (pb_y - pa_y)};
            };
            cross(v00, v10, xa, ya, xb, ya);
            cross(v10, v11, xb, ya, xb, yb);
            cross(v01, v11, xa, yb, xb, yb);
            cross(v00, v01, xa, ya, xa, yb);
            if (npt >= 2) {
                // ambiguous saddles (npt == 4) are drawn as two chords
                for (int s = 0; s + 1 < npt; s += 2) {
                    out << "<line x1=\"" << fmt(map.px(pts[s].x)) << "\" y1=\""
                        << fmt(map.py(pts[s].y)) << "\" x2=\"" << fmt(map.px(pts[s + 1].x))
                        << "\" y2=\"" << fmt(map.py(pts[s + 1].y)) << "\"/>\n";
                }
            }
        }
    }
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::array<ReferencePoint, 3> FigureBundle::default_reference_points() {
    return {ReferencePoint{3.5, 0.5, "exact solution"}, ReferencePoint{4.0, 0.0, "GM"},
            ReferencePoint{1.0, -1.0, "equipartition"}};
}

std::string render_figure(const FigureBundle& bundle) {
    const GridField& g = bundle.grid;
    const int nx = static_cast<int>(g.x_axis.size());
    const int ny = static_cast<int>(g.y_axis.size());
    if (nx < 2 || ny < 2)
        throw std::invalid_argument("render_figure: grid too small");
    if (bundle.curve.empty())
        throw std::invalid_argument("render_figure: curve is empty");

    // need at least one fully usable 2x2 block
    bool block = false;
    for (int iy = 0; iy + 1 < ny && !block; ++iy)
        for (int ix = 0; ix + 1 < nx && !block; ++ix)
            block = usable(g, ix, iy) && usable(g, ix + 1, iy) && usable(g, ix, iy + 1) &&
                    usable(g, ix + 1, iy + 1);
    if (!block)
        throw std::invalid_argument("render_figure: insufficient convergent cells");

    const Mapper map{g.x_axis.front(), g.x_axis.back(), g.y_axis.front(), g.y_axis.back()};

    // contour levels from quantiles of |value| over usable cells
    std::vector<double> mags;
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            if (usable(g, ix, iy) && g.value_at(ix, iy) != 0.0)
                mags.push_back(std::fabs(g.value_at(ix, iy)));
    std::sort(mags.begin(), mags.end());
    std::vector<double> levels;
    for (double q : {0.30, 0.55, 0.75, 0.90}) {
        if (!mags.empty())
            levels.push_back(mags[static_cast<std::size_t>(q * (mags.size() - 1))]);
    }

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

    // contour families: red positive, blue negative
    int li = 0;
    for (double level : levels) {
        const double opacity = 0.35 + 0.15 * li;
        svg << "<g class=\"contour-positive\" stroke=\"#c03030\" stroke-opacity=\"" << fmt(opacity)
            << "\" fill=\"none\" stroke-width=\"1\">\n";
        contour_segments(g, level, map, svg);
        svg << "</g>\n";
        svg << "<g class=\"contour-negative\" stroke=\"#3050c0\" stroke-opacity=\"" << fmt(opacity)
            << "\" fill=\"none\" stroke-width=\"1\">\n";
        contour_segments(g, -level, map, svg);
        svg << "</g>\n";
        ++li;
    }

    // zero curve
    svg << "<polyline class=\"zero-curve\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" "
           "points=\"";
    for (const auto& p : bundle.curve)
        svg << fmt(map.px(p.x)) << ',' << fmt(map.py(p.y)) << ' ';
    svg << "\"/>\n";

    // observations: dots for point exponents, segments for intervals
    for (const auto& r : bundle.observations) {
        const SpectralExponents lo = action_exponents(r.omega_exponent.lo, r.vertical_exponent.lo);
        const SpectralExponents hi = action_exponents(r.omega_exponent.hi, r.vertical_exponent.hi);
        const bool segment = !(r.derived_x.is_point() && r.derived_y.is_point());
        svg << "<g class=\"observation\" stroke=\"#1060c0\" fill=\"none\">\n";
        if (segment) {
            svg << "<line x1=\"" << fmt(map.px(lo.x)) << "\" y1=\"" << fmt(map.py(lo.y))
                << "\" x2=\"" << fmt(map.px(hi.x)) << "\" y2=\"" << fmt(map.py(hi.y))
                << "\" stroke-width=\"2.5\"/>\n";
        } else {
            svg << "<circle cx=\"" << fmt(map.px(lo.x)) << "\" cy=\"" << fmt(map.py(lo.y))
                << "\" r=\"4\" stroke-width=\"2\"/>\n";
        }
        const double tx = map.px(r.derived_x.mid()) + 6.0;
        const double ty = map.py(r.derived_y.mid()) - 6.0;
        svg << "<text x=\"" << fmt(tx) << "\" y=\"" << fmt(ty)
            << "\" font-size=\"11\" fill=\"#1060c0\" stroke=\"none\">" << escape_xml(r.name)
            << "</text>\n</g>\n";
    }

    // reference dots
    for (const auto& rp : bundle.reference_points) {
        svg << "<g class=\"reference\"><circle cx=\"" << fmt(map.px(rp.x)) << "\" cy=\""
            << fmt(map.py(rp.y)) << "\" r=\"5\" fill=\"#d02020\"/>"
            << "<text x=\"" << fmt(map.px(rp.x) + 7.0) << "\" y=\"" << fmt(map.py(rp.y) + 4.0)
            << "\" font-size=\"12\" fill=\"#d02020\">" << escape_xml(rp.label)
            << "</text></g>\n";
    }

    // frame and ticks
    svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
        << kWidth - kLeft - kRight << "\" height=\"" << kHeight - kTop - kBottom
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    const auto nice_ticks = [](double a, double b) {
        std::vector<double> t;
        const double step = 0.5;
        for (double v = std::ceil(a / step) * step; v <= b + 1e-9; v += step)
            t.push_back(v);
        return t;
    };
    for (double t : nice_ticks(map.x0, map.x1)) {
        svg << "<line x1=\"" << fmt(map.px(t)) << "\" y1=\"" << fmt(kHeight - kBottom)
            << "\" x2=\"" << fmt(map.px(t)) << "\" y2=\"" << fmt(kHeight - kBottom + 5) << "\" "
            << "stroke=\"black\"/><text x=\"" << fmt(map.px(t)) << "\" y=\""
            << fmt(kHeight - kBottom + 18) << "\" font-size=\"11\" text-anchor=\"middle\">"
            << fmt(t) << "</text>\n";
    }
    for (double t : nice_ticks(map.y0, map.y1)) {
        svg << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(map.py(t)) << "\" x2=\""
            << fmt(kLeft) << "\" y2=\"" << fmt(map.py(t)) << "\" stroke=\"black\"/>"
            << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(map.py(t) + 4)
            << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(t) << "</text>\n";
    }
    svg << "<text x=\"" << fmt(kLeft + 0.5 * (kWidth - kLeft - kRight)) << "\" y=\""
        << fmt(kHeight - 10) << "\" font-size=\"14\" text-anchor=\"middle\">x</text>\n";
    svg << "<text x=\"16\" y=\"" << fmt(kTop + 0.5 * (kHeight - kTop - kBottom))
        << "\" font-size=\"14\" text-anchor=\"middle\">y</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace iwkin
