#include "support/scan_resonance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace iwkin_test {

namespace {

double residual(iwkin::Branch b, double k, double k1, double k2, double m, double m1) {
    double m2;
    switch (b) {
        case iwkin::Branch::Sum:   m2 = m - m1; break;
        case iwkin::Branch::Diff1: m2 = m1 - m; break;
        default:                   m2 = m1 + m; break;
    }
    if (m1 == 0.0 || m2 == 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    const double w = k / std::fabs(m);
    const double w1 = k1 / std::fabs(m1);
    const double w2 = k2 / std::fabs(m2);
    switch (b) {
        case iwkin::Branch::Sum:   return w - w1 - w2;
        case iwkin::Branch::Diff1: return w1 - w - w2;
        default:                   return w2 - w1 - w;
    }
}

}  // namespace

std::vector<double> scan_resonance_roots(iwkin::Branch branch, double k, double k1, double k2,
                                         double m, int grid_points) {
    const double ma = std::fabs(m);
    // poles of the residual in m1
    std::vector<double> poles{0.0};
    switch (branch) {
        case iwkin::Branch::Sum:   poles.push_back(ma); break;
        case iwkin::Branch::Diff1: poles.push_back(ma); break;
        default:                   poles.push_back(-ma); break;
    }
    std::sort(poles.begin(), poles.end());
    const double span = 12.0 * std::max(1.0, (k1 + k2) / k) * ma;
    std::vector<double> edges{-span};
    for (double p : poles)
        edges.push_back(p);
    edges.push_back(span);

    std::vector<double> roots;
    for (std::size_t seg = 0; seg + 1 < edges.size(); ++seg) {
        const double a = edges[seg], b = edges[seg + 1];
        const double eps = 1e-9 * (b - a);
        const int n = grid_points;
        double prev_x = a + eps;
        double prev_f = residual(branch, k, k1, k2, ma, prev_x);
        for (int i = 1; i < n; ++i) {
            const double x = a + eps + (b - a - 2.0 * eps) * i / (n - 1);
            const double f = residual(branch, k, k1, k2, ma, x);
            if (std::isfinite(prev_f) && std::isfinite(f) && prev_f * f < 0.0) {
                double lo = prev_x, hi = x, flo = prev_f;
                for (int it = 0; it < 100; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = residual(branch, k, k1, k2, ma, mid);
                    if (flo * fm <= 0.0) {
                        hi = mid;
                    } else {
                        lo = mid;
                        flo = fm;
                    }
                }
                roots.push_back(0.5 * (lo + hi));
            }
            prev_x = x;
            prev_f = f;
        }
    }
    if (m < 0.0)
        for (double& r : roots)
            r = -r;
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace iwkin_test
