#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "iwkin/collision.hpp"

namespace iwkin {

struct CurvePoint {
    double x = 0.0;
    double y = 0.0;
    double normalized_residual = 0.0;
    double bracket_width = 0.0;
};

enum class SliceErrorKind { NoSignChange, NonConvergent };

class SliceError : public std::runtime_error {
  public:
    SliceError(SliceErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    SliceErrorKind kind() const { return kind_; }

  private:
    SliceErrorKind kind_;
};

// Root of y -> I(x, y) inside [y_lo, y_hi] by bisection with secant
// acceleration, evaluated at p = (1, 1).  Stops when the bracket width falls
// below 1e-3 or the normalized residual below 1e-3, whichever comes first.
// Throws SliceError(NoSignChange) for same-sign endpoints and
// SliceError(NonConvergent) when an endpoint evaluation is DIVERGENT.
CurvePoint find_zero_on_slice(double x, double y_lo, double y_hi,
                              const QuadratureConfig& cfg = {});

// |I| recorded at fixed offsets above/below a traced zero; quantifies the
// curve "thickness" in near-tangential regions.
struct ThicknessSample {
    double x = 0.0;
    double y_minus = 0.0, residual_minus = 0.0;
    double y_plus = 0.0, residual_plus = 0.0;
};

struct TraceResult {
    std::vector<CurvePoint> points;
    std::vector<ThicknessSample> thickness;
    std::vector<std::string> diagnostics;
};

// Continuation trace of the zero curve from x_start to x_end.  Each slice's
// bracket is re-centered on the previous zero with width
// max(0.1, 4 * step * |local slope|); on bracket failure the width is doubled
// up to 3 times.  Slices that still fail before the first zero are skipped
// with a diagnostic (edge of the integrable region); after the first zero the
// trace stops early with a diagnostic.
TraceResult trace_curve(double x_start, double x_end, double step,
                        const QuadratureConfig& cfg = {});

struct GridField {
    std::vector<double> x_axis;
    std::vector<double> y_axis;
    std::vector<double> values;           // row-major: values[iy * nx + ix]
    std::vector<IntegralStatus> status;

    double value_at(int ix, int iy) const { return values[iy * x_axis.size() + ix]; }
    IntegralStatus status_at(int ix, int iy) const { return status[iy * x_axis.size() + ix]; }
};

// I on the tensor grid, cells evaluated independently (in parallel when
// threads != 1).  The assembly is deterministic regardless of thread count.
GridField grid_I(double x_lo, double x_hi, double y_lo, double y_hi, int nx, int ny,
                 const QuadratureConfig& cfg = {}, int threads = 0);

}  // namespace iwkin
