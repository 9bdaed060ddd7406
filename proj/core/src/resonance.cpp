#include "iwkin/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace iwkin {

namespace {

double clamp_cos(double c) { return std::clamp(c, -1.0, 1.0); }

// Residual of the branch resonance as a function of m1 (m2 fixed by the
// vertical delta), together with the parent frequency used for the relative
// tolerance.  Dispersion constants cancel; N = 1 here.
struct Residual {
    double g;
    double w_parent;
};

double m2_of(Branch b, double m, double m1) {
    switch (b) {
        case Branch::Sum:   return m - m1;
        case Branch::Diff1: return m1 - m;
        default:            return m1 + m;
    }
}

Residual residual(Branch b, double k, double k1, double k2, double m, double m1, double m2) {
    const double w = k / m;
    const double w1 = k1 / std::fabs(m1);
    const double w2 = k2 / std::fabs(m2);
    switch (b) {
        case Branch::Sum:   return {w - w1 - w2, w};
        case Branch::Diff1: return {w1 - w - w2, w1};
        default:            return {w2 - w1 - w, w2};
    }
}

double residual_slope(Branch b, double k1, double k2, double m1, double m2) {
    const double s1 = m1 > 0.0 ? 1.0 : -1.0;
    const double s2 = m2 > 0.0 ? 1.0 : -1.0;
    const double v = k1 * s1 / (m1 * m1) - k2 * s2 / (m2 * m2);
    return b == Branch::Diff1 ? -v : v;
}

struct SignCase {
    double s1, s2, lo, hi;
};

}  // namespace

bool in_kinematic_box(double k, double k1, double k2) {
    if (k < 0.0 || k1 < 0.0 || k2 < 0.0)
        return false;
    return k < k1 + k2 && k1 < k + k2 && k2 < k + k1;
}

double delta_jacobian(double k, double k1, double k2) {
    double a = k, b = k1, c = k2;
    if (a < b) std::swap(a, b);
    if (b < c) std::swap(b, c);
    if (a < b) std::swap(a, b);
    // Kahan's ordering-stable form of 16 A^2
    const double t = c - (a - b);
    if (t < 0.0)
        throw std::domain_error("delta_jacobian: arguments outside the kinematic box");
    const double rad = (a + (b + c)) * t * (c + (a - b)) * (a + (b - c));
    return 0.5 * std::sqrt(rad);
}

TriangleGeometry triangle_cosines(double k, double k1, double k2) {
    if (k <= 0.0 || k1 <= 0.0 || k2 <= 0.0)
        throw std::domain_error("triangle_cosines: degenerate triangle (zero side)");
    TriangleGeometry g;
    g.k = k; g.k1 = k1; g.k2 = k2;
    g.cos01 = clamp_cos((k * k + k1 * k1 - k2 * k2) / (2.0 * k * k1));
    g.cos02 = clamp_cos((k * k + k2 * k2 - k1 * k1) / (2.0 * k * k2));
    g.cos12 = clamp_cos((k * k - k1 * k1 - k2 * k2) / (2.0 * k1 * k2));
    return g;
}

TriangleGeometry branch_geometry(Branch branch, double k, double k1, double k2) {
    if (k <= 0.0 || k1 <= 0.0 || k2 <= 0.0)
        throw std::domain_error("branch_geometry: degenerate triangle (zero side)");
    TriangleGeometry g;
    g.k = k; g.k1 = k1; g.k2 = k2;
    const double q = k * k, q1 = k1 * k1, q2 = k2 * k2;
    switch (branch) {
        case Branch::Sum:
            g.cos01 = clamp_cos((q + q1 - q2) / (2.0 * k * k1));
            g.cos02 = clamp_cos((q + q2 - q1) / (2.0 * k * k2));
            g.cos12 = clamp_cos((q - q1 - q2) / (2.0 * k1 * k2));
            break;
        case Branch::Diff1:
            g.cos01 = clamp_cos((q1 + q - q2) / (2.0 * k1 * k));
            g.cos02 = clamp_cos((q1 - q - q2) / (2.0 * k * k2));
            g.cos12 = clamp_cos((q1 + q2 - q) / (2.0 * k1 * k2));
            break;
        case Branch::Diff2:
            g.cos01 = clamp_cos((q2 - q1 - q) / (2.0 * k1 * k));
            g.cos02 = clamp_cos((q2 + q - q1) / (2.0 * k2 * k));
            g.cos12 = clamp_cos((q2 + q1 - q) / (2.0 * k2 * k1));
            break;
    }
    return g;
}

std::vector<VerticalRoot> solve_vertical_roots(Branch branch, double k, double k1, double k2,
                                               double m) {
    if (m == 0.0)
        throw std::domain_error("solve_vertical: m = 0");
    if (!in_kinematic_box(k, k1, k2))
        throw std::domain_error("solve_vertical: (k, k1, k2) outside the kinematic box");

    // Spectra and resonances are even in m: solve for m > 0 and mirror back.
    const double mirror = m < 0.0 ? -1.0 : 1.0;
    const double ma = std::fabs(m);
    const double inf = std::numeric_limits<double>::infinity();

    SignCase cases[3];
    switch (branch) {
        case Branch::Sum:
            cases[0] = {+1.0, +1.0, 0.0, ma};
            cases[1] = {-1.0, +1.0, -inf, 0.0};
            cases[2] = {+1.0, -1.0, ma, inf};
            break;
        case Branch::Diff1:
            cases[0] = {+1.0, +1.0, ma, inf};
            cases[1] = {+1.0, -1.0, 0.0, ma};
            cases[2] = {-1.0, -1.0, -inf, 0.0};
            break;
        case Branch::Diff2:
            cases[0] = {+1.0, +1.0, 0.0, inf};
            cases[1] = {-1.0, +1.0, -ma, 0.0};
            cases[2] = {-1.0, -1.0, -inf, -ma};
            break;
    }

    std::vector<VerticalRoot> out;
    for (const SignCase& sc : cases) {
        const double A = k * sc.s1 * sc.s2;
        const double Bcore = (A + k1 * sc.s2 - k2 * sc.s1) * ma;
        const double B = branch == Branch::Diff2 ? Bcore : -Bcore;
        const double C = k1 * sc.s2 * ma * ma;
        const double disc = B * B - 4.0 * A * C;
        if (disc < 0.0)
            continue;
        const double sq = std::sqrt(disc);
        // stable quadratic roots
        const double q = B != 0.0 ? -0.5 * (B + std::copysign(sq, B)) : -0.5 * sq;
        double cand[2];
        int ncand = 0;
        if (q != 0.0) {
            cand[ncand++] = q / A;
            cand[ncand++] = C / q;
        } else {
            cand[ncand++] = 0.0;
        }
        for (int i = 0; i < ncand; ++i) {
            double m1 = cand[i];
            if (!(m1 > sc.lo && m1 < sc.hi))
                continue;
            double m2 = m2_of(branch, ma, m1);
            if (std::fabs(m1) < 1e-13 * ma || std::fabs(m2) < 1e-13 * ma)
                continue;
            // Newton polish on the residual
            for (int it = 0; it < 3; ++it) {
                const Residual r = residual(branch, k, k1, k2, ma, m1, m2);
                if (std::fabs(r.g) < 1e-14 * r.w_parent)
                    break;
                const double sl = residual_slope(branch, k1, k2, m1, m2);
                if (sl == 0.0)
                    break;
                const double m1n = m1 - r.g / sl;
                if (!(m1n > sc.lo && m1n < sc.hi))
                    break;
                m1 = m1n;
                m2 = m2_of(branch, ma, m1);
                if (m1 == 0.0 || m2 == 0.0)
                    break;
            }
            if (m1 == 0.0 || m2 == 0.0)
                continue;
            const Residual r = residual(branch, k, k1, k2, ma, m1, m2);
            if (!(std::fabs(r.g) <= 1e-10 * r.w_parent))
                continue;
            if ((m1 > 0.0 ? 1.0 : -1.0) != sc.s1 || (m2 > 0.0 ? 1.0 : -1.0) != sc.s2)
                continue;
            const double slope = std::fabs(residual_slope(branch, k1, k2, m1, m2));
            bool dup = false;
            for (const VerticalRoot& o : out) {
                if (std::fabs(m1 - o.m1) <= 1e-12 * std::max(1.0, std::fabs(m1))) {
                    dup = true;
                    break;
                }
            }
            if (!dup)
                out.push_back({mirror * m1, mirror * m2, slope});
        }
    }
    return out;
}

std::vector<std::pair<double, double>> solve_vertical(Branch branch, double k, double k1,
                                                      double k2, double m) {
    std::vector<std::pair<double, double>> out;
    for (const VerticalRoot& r : solve_vertical_roots(branch, k, k1, k2, m))
        out.emplace_back(r.m1, r.m2);
    return out;
}

}  // namespace iwkin
