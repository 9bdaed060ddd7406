#include "iwkin/zero_curve.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace iwkin {

namespace {

constexpr double kBracketTol = 1e-3;
constexpr double kResidualTol = 1e-3;
constexpr double kThicknessOffset = 0.25;

IntegralResult eval_xy(double x, double y, const QuadratureConfig& cfg) {
    return evaluate_I({x, y, 1.0}, {1.0, 1.0}, cfg);
}

}  // namespace

CurvePoint find_zero_on_slice(double x, double y_lo, double y_hi, const QuadratureConfig& cfg) {
    if (!(y_lo < y_hi))
        throw std::invalid_argument("find_zero_on_slice: y_lo must be < y_hi");
    IntegralResult rlo = eval_xy(x, y_lo, cfg);
    IntegralResult rhi = eval_xy(x, y_hi, cfg);
    if (rlo.status == IntegralStatus::Divergent || rhi.status == IntegralStatus::Divergent) {
        std::ostringstream os;
        os << "NON_CONVERGENT: divergent endpoint on slice x=" << x;
        throw SliceError(SliceErrorKind::NonConvergent, os.str());
    }
    double flo = rlo.value, fhi = rhi.value;
    if (flo == 0.0)
        return {x, y_lo, rlo.normalized_residual(), y_hi - y_lo};
    if (fhi == 0.0)
        return {x, y_hi, rhi.normalized_residual(), y_hi - y_lo};
    if ((flo > 0.0) == (fhi > 0.0)) {
        std::ostringstream os;
        os << "NO_SIGN_CHANGE on slice x=" << x << " over [" << y_lo << ", " << y_hi << "]";
        throw SliceError(SliceErrorKind::NoSignChange, os.str());
    }

    double lo = y_lo, hi = y_hi;
    double y_best = 0.5 * (lo + hi);
    double res_best = 1.0;
    for (int it = 0; it < 80 && hi - lo > kBracketTol; ++it) {
        // secant proposal, clamped into the inner 10-90% of the bracket
        double cand = hi - fhi * (hi - lo) / (fhi - flo);
        const double margin = 0.1 * (hi - lo);
        if (!(cand > lo + margin && cand < hi - margin))
            cand = 0.5 * (lo + hi);
        const IntegralResult r = eval_xy(x, cand, cfg);
        if (r.status == IntegralStatus::Divergent)
            throw SliceError(SliceErrorKind::NonConvergent,
                             "NON_CONVERGENT: divergent interior evaluation");
        y_best = cand;
        res_best = r.normalized_residual();
        if (res_best <= kResidualTol)
            return {x, cand, res_best, hi - lo};
        if ((r.value > 0.0) == (flo > 0.0)) {
            lo = cand;
            flo = r.value;
        } else {
            hi = cand;
            fhi = r.value;
        }
    }
    if (hi - lo <= kBracketTol) {
        const double mid = 0.5 * (lo + hi);
        const IntegralResult r = eval_xy(x, mid, cfg);
        return {x, mid, r.normalized_residual(), hi - lo};
    }
    return {x, y_best, res_best, hi - lo};
}

TraceResult trace_curve(double x_start, double x_end, double step, const QuadratureConfig& cfg) {
    if (!(step > 0.0))
        throw std::invalid_argument("trace_curve: step must be positive");
    if (!(x_end > x_start))
        throw std::invalid_argument("trace_curve: x_end must exceed x_start");

    TraceResult out;
    double slope = -1.0;  // seed slope from the two analytic landmarks
    const auto seed_center = [](double x) { return 0.5 - (x - 3.5); };

    const int nslices = static_cast<int>(std::floor((x_end - x_start) / step + 0.5)) + 1;
    for (int i = 0; i < nslices; ++i) {
        const double x = x_start + i * step;
        const double center = out.points.empty()
                                  ? seed_center(x)
                                  : out.points.back().y + slope * (x - out.points.back().x);
        double width = std::max(0.1, 4.0 * step * std::fabs(slope));
        bool found = false;
        std::string last_error;
        for (int attempt = 0; attempt <= 3 && !found; ++attempt) {
            try {
                const CurvePoint pt =
                    find_zero_on_slice(x, center - 0.5 * width, center + 0.5 * width, cfg);
                if (!out.points.empty()) {
                    const double dx = x - out.points.back().x;
                    if (dx > 0.0)
                        slope = (pt.y - out.points.back().y) / dx;
                }
                out.points.push_back(pt);
                ThicknessSample ts;
                ts.x = x;
                ts.y_minus = pt.y - kThicknessOffset;
                ts.y_plus = pt.y + kThicknessOffset;
                ts.residual_minus = eval_xy(x, ts.y_minus, cfg).normalized_residual();
                ts.residual_plus = eval_xy(x, ts.y_plus, cfg).normalized_residual();
                out.thickness.push_back(ts);
                found = true;
            } catch (const SliceError& e) {
                last_error = e.what();
                width *= 2.0;
            }
        }
        if (!found) {
            std::ostringstream os;
            if (out.points.empty()) {
                os << "no bracket at x=" << x << " after 3 expansions (" << last_error
                   << "); slice skipped";
                out.diagnostics.push_back(os.str());
            } else {
                os << "bracket lost at x=" << x << " after 3 expansions (" << last_error
                   << "); trace stopped";
                out.diagnostics.push_back(os.str());
                break;
            }
        }
    }
    if (out.points.empty())
        out.diagnostics.push_back("trace produced no points");
    return out;
}

GridField grid_I(double x_lo, double x_hi, double y_lo, double y_hi, int nx, int ny,
                 const QuadratureConfig& cfg, int threads) {
    if (nx < 2 || ny < 2)
        throw std::invalid_argument("grid_I: nx and ny must be >= 2");
    if (!(x_hi > x_lo) || !(y_hi > y_lo))
        throw std::invalid_argument("grid_I: ranges must be increasing");

    GridField g;
    g.x_axis.resize(nx);
    g.y_axis.resize(ny);
    for (int i = 0; i < nx; ++i)
        g.x_axis[i] = x_lo + (x_hi - x_lo) * i / (nx - 1);
    for (int j = 0; j < ny; ++j)
        g.y_axis[j] = y_lo + (y_hi - y_lo) * j / (ny - 1);
    const std::size_t ncell = static_cast<std::size_t>(nx) * ny;
    g.values.assign(ncell, 0.0);
    g.status.assign(ncell, IntegralStatus::MaxLevels);

    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1)
        nthreads = 1;

    std::atomic<std::size_t> next{0};
    std::mutex err_mtx;
    std::exception_ptr first_error;
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= ncell)
                return;
            const int ix = static_cast<int>(idx % nx);
            const int iy = static_cast<int>(idx / nx);
            try {
                const IntegralResult r = eval_xy(g.x_axis[ix], g.y_axis[iy], cfg);
                g.values[idx] = r.value;
                g.status[idx] = r.status;
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mtx);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
        }
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);
    return g;
}

}  // namespace iwkin
