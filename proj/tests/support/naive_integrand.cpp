#include "support/naive_integrand.hpp"

#include <cmath>
#include <cstddef>

namespace iwkin_test {

namespace {

// residual of each branch resonance, N = 1, m > 0
double res_sum(double k, double m, double k1, double k2, double m1) {
    return k / m - k1 / std::fabs(m1) - k2 / std::fabs(m - m1);
}
double res_d1(double k, double m, double k1, double k2, double m1) {
    return k1 / std::fabs(m1) - k / m - k2 / std::fabs(m1 - m);
}
double res_d2(double k, double m, double k1, double k2, double m1) {
    return k2 / std::fabs(m1 + m) - k1 / std::fabs(m1) - k / m;
}

struct Quad {
    double A, B, C;
    double lo, hi;  // admissible m1 interval for the case
};

int solve_cases(const Quad* cases, int ncases, double (*res)(double, double, double, double, double),
                double k, double m, double k1, double k2, double* roots) {
    int nroots = 0;
    for (int c = 0; c < ncases; ++c) {
        const Quad& q = cases[c];
        const double disc = q.B * q.B - 4.0 * q.A * q.C;
        if (disc < 0.0)
            continue;
        const double sq = std::sqrt(disc);
        const double r1 = (-q.B + sq) / (2.0 * q.A);
        const double r2 = (-q.B - sq) / (2.0 * q.A);
        const double cand[2] = {r1, r2};
        for (double m1 : cand) {
            if (!(m1 > q.lo && m1 < q.hi))
                continue;
            const double g = res(k, m, k1, k2, m1);
            const double wref = k / m + k1 / std::fabs(m1);
            if (!(std::fabs(g) <= 1e-8 * wref))
                continue;
            bool dup = false;
            for (int i = 0; i < nroots; ++i)
                if (std::fabs(roots[i] - m1) <= 1e-10 * (1.0 + std::fabs(m1)))
                    dup = true;
            if (!dup)
                roots[nroots++] = m1;
        }
    }
    return nroots;
}

}  // namespace

double naive_integrand(double x, double y, double k, double m, double k1, double k2) {
    const double inf = 1e300;
    const double m2_ = m * m;

    // hand-derived sign-case quadratics (A m1^2 + B m1 + C = 0)
    const Quad sum_cases[3] = {
        {k, -m * (k + k1 - k2), k1 * m2_, 0.0, m},     // 0 < m1 < m
        {k, m * (k1 + k2 - k), -k1 * m2_, -inf, 0.0},  // m1 < 0
        {k, -m * (k + k1 + k2), k1 * m2_, m, inf},     // m1 > m
    };
    const Quad d1_cases[3] = {
        {k, -m * (k + k1 - k2), k1 * m2_, m, inf},     // m1 > m
        {k, -m * (k + k1 + k2), k1 * m2_, 0.0, m},     // 0 < m1 < m
        {k, m * (k1 - k - k2), -k1 * m2_, -inf, 0.0},  // m1 < 0
    };
    const Quad d2_cases[3] = {
        {k, m * (k + k1 - k2), k1 * m2_, 0.0, inf},    // m1 > 0
        {k, m * (k - k1 - k2), -k1 * m2_, -m, 0.0},    // -m < m1 < 0
        {k, m * (k - k1 + k2), -k1 * m2_, -inf, -m},   // m1 < -m
    };

    // triangle area from Heron's formula; Delta = 2 * area
    const double sp = 0.5 * (k + k1 + k2);
    const double area2 = sp * (sp - k) * (sp - k1) * (sp - k2);
    if (area2 <= 0.0)
        return 0.0;
    const double delta = 2.0 * std::sqrt(area2);

    const double pref = 1.0 / (4.0 * std::sqrt(2.0));
    const double n = std::pow(k, -x) * std::pow(m, -y);

    double total = 0.0;
    for (int branch = 0; branch < 3; ++branch) {
        double roots[6];
        int nroots = 0;
        double (*res)(double, double, double, double, double) = nullptr;
        switch (branch) {
            case 0:
                res = res_sum;
                nroots = solve_cases(sum_cases, 3, res, k, m, k1, k2, roots);
                break;
            case 1:
                res = res_d1;
                nroots = solve_cases(d1_cases, 3, res, k, m, k1, k2, roots);
                break;
            default:
                res = res_d2;
                nroots = solve_cases(d2_cases, 3, res, k, m, k1, k2, roots);
                break;
        }

        // closure cosines for this branch's own horizontal momentum condition
        double c01, c02, c12;
        if (branch == 0) {  // k = k1 + k2
            c01 = (k * k + k1 * k1 - k2 * k2) / (2.0 * k * k1);
            c02 = (k * k + k2 * k2 - k1 * k1) / (2.0 * k * k2);
            c12 = (k * k - k1 * k1 - k2 * k2) / (2.0 * k1 * k2);
        } else if (branch == 1) {  // k1 = k + k2
            c01 = (k1 * k1 + k * k - k2 * k2) / (2.0 * k1 * k);
            c02 = (k1 * k1 - k * k - k2 * k2) / (2.0 * k * k2);
            c12 = (k1 * k1 + k2 * k2 - k * k) / (2.0 * k1 * k2);
        } else {  // k2 = k1 + k
            c01 = (k2 * k2 - k1 * k1 - k * k) / (2.0 * k1 * k);
            c02 = (k2 * k2 + k * k - k1 * k1) / (2.0 * k2 * k);
            c12 = (k2 * k2 + k1 * k1 - k * k) / (2.0 * k2 * k1);
        }
        if (c01 > 1.0) c01 = 1.0;
        if (c01 < -1.0) c01 = -1.0;
        if (c02 > 1.0) c02 = 1.0;
        if (c02 < -1.0) c02 = -1.0;
        if (c12 > 1.0) c12 = 1.0;
        if (c12 < -1.0) c12 = -1.0;

        for (int i = 0; i < nroots; ++i) {
            const double m1 = roots[i];
            double m2;
            switch (branch) {
                case 0:  m2 = m - m1; break;
                case 1:  m2 = m1 - m; break;
                default: m2 = m1 + m; break;
            }
            const double w = k / m;
            const double w1 = k1 / std::fabs(m1);
            const double w2 = k2 / std::fabs(m2);

            // V = U^p_{p1 p2} + U^{p1}_{p p2} + U^{p2}_{p p1}, written out
            const double U0 = -pref * c12 * std::sqrt(w1 * w2 / w) * k;
            const double U1 = -pref * c02 * std::sqrt(w * w2 / w1) * k1;
            const double U2 = -pref * c01 * std::sqrt(w * w1 / w2) * k2;
            const double V = U0 + U1 + U2;

            const double n1 = std::pow(k1, -x) * std::pow(std::fabs(m1), -y);
            const double n2 = std::pow(k2, -x) * std::pow(std::fabs(m2), -y);
            double f;
            switch (branch) {
                case 0:  f = n1 * n2 - n * (n1 + n2); break;
                case 1:  f = n * n2 - n1 * (n + n2); break;
                default: f = n1 * n - n2 * (n1 + n); break;
            }

            // Jacobian of the frequency delta by central difference
            const double h = 1e-6 * (std::fabs(m1) + m);
            const double gp = (res(k, m, k1, k2, m1 + h) - res(k, m, k1, k2, m1 - h)) / (2.0 * h);
            if (gp == 0.0 || !std::isfinite(gp))
                continue;
            const double J = 1.0 / std::fabs(gp);
            if (J > 1e12)
                continue;

            const double sign = branch == 0 ? 1.0 : -1.0;
            total += sign * f * V * V * k1 * k2 * J / delta;
        }
    }
    return total;
}

}  // namespace iwkin_test
