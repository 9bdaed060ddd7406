#pragma once

#include <array>
#include <string>
#include <vector>

#include "iwkin/observations.hpp"
#include "iwkin/zero_curve.hpp"

namespace iwkin {

struct ReferencePoint {
    double x = 0.0;
    double y = 0.0;
    std::string label;
};

// Everything the figure needs: contour grid, traced zero curve, observation
// markers and the three labeled reference dots (exact solution, GM,
// equipartition).
struct FigureBundle {
    GridField grid;
    std::vector<CurvePoint> curve;
    std::vector<ObservationRecord> observations;
    std::array<ReferencePoint, 3> reference_points = default_reference_points();

    static std::array<ReferencePoint, 3> default_reference_points();
};

// Standalone SVG: iso-lines of I by marching squares on non-divergent cells
// (red positive levels, blue negative), the zero curve as a black polyline,
// blue observation markers (intervals drawn as segments), labeled red
// reference dots, axes with ticks.  Deterministic for a fixed bundle.
std::string render_figure(const FigureBundle& bundle);

}  // namespace iwkin
