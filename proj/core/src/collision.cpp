#include "iwkin/collision.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace iwkin {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCornerSplit = 0.05;  // corner-wedge radius, units of k
constexpr double kJacobianCap = 1e12;  // tangential-crossing exclusion

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes/weights on (-1, 1), cached per order.
struct GlRule {
    std::vector<double> x, w;
};

const GlRule& gauss_legendre(int n) {
    static std::map<int, GlRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    GlRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int mhalf = (n + 1) / 2;
    for (int i = 0; i < mhalf; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15)
                break;
        }
        rule.x[i] = -z;
        rule.x[n - 1 - i] = z;
        rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[n - 1 - i] = rule.w[i];
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

// ---------------------------------------------------------------------------
// Pointwise kernel in strip coordinates u = k1 + k2 - k, v = k1 - k2.
// Delta is assembled from (u, v) directly so near-edge nodes never hit the
// cancellation in the textbook radicand.
struct KernelAccum {
    double value = 0.0;
    double term_scale = 0.0;
    int roots = 0;
    std::int64_t tangential = 0;
};

KernelAccum integrand_uv(const SpectralExponents& s, double k, double m, double u, double v) {
    KernelAccum acc;
    const double k1 = 0.5 * (u + k + v);
    const double k2 = 0.5 * (u + k - v);
    const double delta = 0.5 * std::sqrt((u + 2.0 * k) * u * (k - v) * (k + v));
    const double n = s.n0 * std::pow(k, -s.x) * std::pow(m, -s.y);
    const PhysicalConstants pc{};

    for (int bi = 0; bi < 3; ++bi) {
        const Branch branch = static_cast<Branch>(bi);
        const double sign = bi == 0 ? 1.0 : -1.0;
        const TriangleGeometry geo = branch_geometry(branch, k, k1, k2);
        for (const VerticalRoot& root : solve_vertical_roots(branch, k, k1, k2, m)) {
            if (root.slope == 0.0 || 1.0 / root.slope > kJacobianCap) {
                ++acc.tangential;
                continue;
            }
            const Wavenumber p{k, m}, p1{k1, root.m1}, p2{k2, root.m2};
            const double n1 = s.n0 * std::pow(k1, -s.x) * std::pow(std::fabs(root.m1), -s.y);
            const double n2 = s.n0 * std::pow(k2, -s.x) * std::pow(std::fabs(root.m2), -s.y);
            double f, fref;
            switch (branch) {
                case Branch::Sum:
                    f = n1 * n2 - n * (n1 + n2);
                    break;
                case Branch::Diff1:
                    f = n * n2 - n1 * (n + n2);
                    break;
                default:
                    f = n1 * n - n2 * (n1 + n);
                    break;
            }
            fref = std::max({n1 * n2, n * n1, n * n2});
            const double V = matrix_element_V(p, p1, p2, geo.cos01, geo.cos02, geo.cos12, pc);
            const double W = V * V * k1 * k2 / (root.slope * delta);
            acc.value += sign * f * W;
            acc.term_scale = std::max(acc.term_scale, fref * W);
            ++acc.roots;
        }
    }
    return acc;
}

struct LevelSums {
    double integral = 0.0;
    double abs_integral = 0.0;
    std::int64_t samples = 0;
    std::int64_t tangential = 0;
};

void check_finite(double f, const SpectralExponents& s, double k1, double k2) {
    if (!std::isfinite(f)) {
        std::ostringstream os;
        os << "evaluate_I: non-finite integrand sample at k1=" << k1 << " k2=" << k2
           << " for x=" << s.x << " y=" << s.y;
        throw std::runtime_error(os.str());
    }
}

// One full pass over bulk + two corner wedges + tail at the given node count
// and window depth.
LevelSums level_pass(const SpectralExponents& s, double k, double m, int n, double sigma,
                     double u0_scale) {
    LevelSums out;
    const GlRule& ga = gauss_legendre(n);
    const double u0 = u0_scale * k;
    const double r0 = kCornerSplit * k;
    const double rmin = 2.0 * k / sigma;
    const double umax = 2.0 * k * sigma;

    auto sample = [&](double u, double v, double weight) {
        const KernelAccum a = integrand_uv(s, k, m, u, v);
        check_finite(a.value, s, 0.5 * (u + k + v), 0.5 * (u + k - v));
        out.integral += weight * a.value;
        out.abs_integral += weight * std::fabs(a.value);
        out.tangential += a.tangential;
        ++out.samples;
    };

    // bulk strip: u = sq^2 absorbs the bottom-edge singularity, v = vmax sin(th)
    // absorbs both diagonal edges; the corner wedges u + e < r0 are cut out.
    const double shalf = 0.5 * std::sqrt(u0);
    for (int i = 0; i < n; ++i) {
        const double sq = shalf * (ga.x[i] + 1.0);
        const double u = sq * sq;
        const double ws = shalf * ga.w[i] * 2.0 * sq;
        const double vmax = k - std::max(0.0, r0 - u);
        for (int j = 0; j < n; ++j) {
            const double th = 0.5 * kPi * ga.x[j];
            const double v = vmax * std::sin(th);
            sample(u, v, ws * 0.5 * kPi * ga.w[j] * vmax * std::cos(th));
        }
    }

    // corner wedges at (k1, k2) -> (k, 0) and (0, k): ring coordinates
    // r = u + e log-spaced, angular coordinate h with sqrt-clustered endpoints.
    const double la = std::log(rmin), lb = std::log(r0);
    for (int i = 0; i < n; ++i) {
        const double lr = 0.5 * (la + lb) + 0.5 * (lb - la) * ga.x[i];
        const double r = std::exp(lr);
        const double wr = 0.5 * (lb - la) * ga.w[i] * r * r;  // area = r dr dh
        for (int j = 0; j < n; ++j) {
            const double psi = 0.5 * kPi * ga.x[j];
            const double h = 0.5 * (1.0 + std::sin(psi));
            const double wh = 0.25 * kPi * std::cos(psi) * ga.w[j];
            const double u = r * h;
            const double e = r * (1.0 - h);
            if (u == 0.0 || e >= k)
                continue;
            sample(u, k - e, wr * wh);
            sample(u, e - k, wr * wh);
        }
    }

    // tail: u log-spaced on (u0, umax), transverse direction as in the bulk
    const double ta = std::log(u0), tb = std::log(umax);
    for (int i = 0; i < n; ++i) {
        const double lu = 0.5 * (ta + tb) + 0.5 * (tb - ta) * ga.x[i];
        const double u = std::exp(lu);
        const double wu = 0.5 * (tb - ta) * ga.w[i] * u;
        for (int j = 0; j < n; ++j) {
            const double th = 0.5 * kPi * ga.x[j];
            const double v = k * std::sin(th);
            sample(u, v, wu * 0.5 * kPi * ga.w[j] * k * std::cos(th));
        }
    }
    return out;
}

}  // namespace

void QuadratureConfig::validate() const {
    if (base_resolution < 2)
        throw std::invalid_argument("QuadratureConfig: base_resolution must be >= 2");
    if (max_levels < 2)
        throw std::invalid_argument("QuadratureConfig: max_levels must be >= 2");
    if (!(rel_tol > 0.0))
        throw std::invalid_argument("QuadratureConfig: rel_tol must be positive");
    if (!(domain_scale > 0.0))
        throw std::invalid_argument("QuadratureConfig: domain_scale must be positive");
    if (!(divergence_growth > 1.0))
        throw std::invalid_argument("QuadratureConfig: divergence_growth must be > 1");
    if (!(scale_window >= 100.0))
        throw std::invalid_argument("QuadratureConfig: scale_window must be >= 100");
}

const char* to_string(IntegralStatus s) {
    switch (s) {
        case IntegralStatus::Converged: return "CONVERGED";
        case IntegralStatus::MaxLevels: return "MAX_LEVELS";
        default:                        return "DIVERGENT";
    }
}

double integrand(const SpectralExponents& s, const Wavenumber& p, double k1, double k2) {
    return integrand_terms(s, p, k1, k2).value;
}

IntegrandTerms integrand_terms(const SpectralExponents& s, const Wavenumber& p, double k1,
                               double k2) {
    if (p.m <= 0.0)
        throw std::domain_error("integrand: requires m > 0");
    if (!in_kinematic_box(p.k, k1, k2))
        throw std::domain_error("integrand: (k, k1, k2) outside the kinematic box");
    const double u = (k1 - p.k) + k2;
    const double v = k1 - k2;
    const KernelAccum a = integrand_uv(s, p.k, p.m, u, v);
    return {a.value, a.term_scale, a.roots, a.tangential};
}

IntegralResult evaluate_I(const SpectralExponents& s, const Wavenumber& p,
                          const QuadratureConfig& cfg) {
    cfg.validate();
    if (!(p.k > 0.0))
        throw std::domain_error("evaluate_I: requires k > 0");
    if (!(p.m > 0.0))
        throw std::domain_error("evaluate_I: requires m > 0");
    if (!(s.n0 > 0.0))
        throw std::domain_error("evaluate_I: requires n0 > 0");

    IntegralResult res;
    int streak = 0;
    for (int lev = 0; lev < cfg.max_levels; ++lev) {
        const int n = cfg.base_resolution << lev;
        const double sigma = cfg.scale_window * std::pow(4.0, lev);
        const LevelSums ls = level_pass(s, p.k, p.m, n, sigma, cfg.domain_scale);
        res.evaluations += ls.samples;
        res.tangential_skips += ls.tangential;
        res.level_values.push_back(ls.integral);
        res.level_scales.push_back(ls.abs_integral);
        res.levels_used = lev + 1;
        res.value = ls.integral;
        res.reference_scale = ls.abs_integral;
        if (lev > 0) {
            const double prev = res.level_values[lev - 1];
            const double diff = std::fabs(ls.integral - prev);
            res.level_errors.push_back(diff);
            res.error_estimate = diff;
            if (diff <= cfg.rel_tol * ls.abs_integral) {
                res.status = IntegralStatus::Converged;
                return res;
            }
            if (std::fabs(ls.integral) > cfg.divergence_growth * std::fabs(prev) &&
                std::fabs(ls.integral) > 1e-12 * ls.abs_integral) {
                if (++streak >= 2) {
                    res.status = IntegralStatus::Divergent;
                    return res;
                }
            } else {
                streak = 0;
            }
        }
    }
    const int L = res.levels_used;
    if (L >= 2 && std::fabs(res.level_values[L - 1]) >
                      cfg.divergence_growth * std::fabs(res.level_values[L - 2]))
        res.status = IntegralStatus::Divergent;
    else
        res.status = IntegralStatus::MaxLevels;
    return res;
}

ScalingCheck scaling_exponent_check(const SpectralExponents& s, const Wavenumber& p,
                                    double alpha, double beta, const QuadratureConfig& cfg) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw std::domain_error("scaling_exponent_check: alpha, beta must be positive");
    ScalingCheck out;
    out.expected_integral = std::pow(alpha, 4.0 - 2.0 * s.x) * std::pow(beta, 1.0 - 2.0 * s.y);
    out.expected_node = std::pow(alpha, 2.0 - 2.0 * s.x) * std::pow(beta, 1.0 - 2.0 * s.y);

    // pointwise probe at a fixed interior node of the box
    const double u = 0.6 * p.k, v = 0.25 * p.k;
    const double k1 = 0.5 * (u + p.k + v), k2 = 0.5 * (u + p.k - v);
    const double f0 = integrand(s, p, k1, k2);
    const double f1 = integrand(s, {alpha * p.k, beta * p.m}, alpha * k1, alpha * k2);
    if (f0 == 0.0)
        throw std::domain_error("scaling_exponent_check: probe integrand vanishes");
    out.measured_node = f1 / f0;

    const IntegralResult base = evaluate_I(s, p, cfg);
    const IntegralResult scaled = evaluate_I(s, {alpha * p.k, beta * p.m}, cfg);
    if (base.status == IntegralStatus::Divergent || scaled.status == IntegralStatus::Divergent)
        throw std::runtime_error("scaling_exponent_check: divergent evaluation");
    if (std::fabs(base.value) <= 1e-6 * base.reference_scale)
        throw std::domain_error(
            "scaling_exponent_check: I(k, m) is numerically zero; use a non-steady exponent pair");
    out.measured_integral = scaled.value / base.value;
    return out;
}

}  // namespace iwkin
