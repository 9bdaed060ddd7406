#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "iwkin/resonance.hpp"
#include "iwkin/spectral.hpp"

namespace iwkin {

// Quadrature controls for evaluate_I.  The kinematic box is integrated over a
// scale-separation window: daughter horizontal wavenumbers down to k/sigma and
// parent wavenumbers up to sigma*k, with sigma = scale_window * 4^level.  The
// window deepens alongside node doubling so that non-integrable spectra show
// up as level-to-level growth.
struct QuadratureConfig {
    int base_resolution = 16;        // nodes per dimension at level 0
    int max_levels = 4;              // refinement depth
    double rel_tol = 1e-3;           // successive-level convergence criterion
    double domain_scale = 4.0;       // bulk/tail split of the unbounded direction, units of k
    double divergence_growth = 2.0;  // successive-level growth factor flagging divergence
    double scale_window = 1.6e4;     // level-0 scale-separation window

    void validate() const;  // throws std::invalid_argument
};

enum class IntegralStatus { Converged, MaxLevels, Divergent };

const char* to_string(IntegralStatus s);

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    IntegralStatus status = IntegralStatus::MaxLevels;
    int levels_used = 0;
    std::int64_t evaluations = 0;
    double reference_scale = 0.0;        // integral of |integrand| at the final level
    std::int64_t tangential_skips = 0;   // roots dropped by the Jacobian cap
    std::vector<double> level_values;    // per-level estimates (diagnostics)
    std::vector<double> level_scales;    // per-level |integrand| integrals
    std::vector<double> level_errors;    // successive-level differences

    double normalized_residual() const {
        return reference_scale > 0.0 ? std::fabs(value) / reference_scale : 0.0;
    }
};

// Pointwise reduced integrand of the kinetic equation at in-box (k1, k2):
// sum over the three branches (signs +, -, -) and their validated vertical
// roots of f |V|^2 k1 k2 J / Delta, J = |d(frequency residual)/d m1|^-1.
double integrand(const SpectralExponents& s, const Wavenumber& p, double k1, double k2);

// Integrand with diagnostics: the largest additive term magnitude with the
// occupation combination replaced by its largest constituent product (the
// roundoff reference for detailed-balance checks), the root count, and the
// number of tangential-root skips.
struct IntegrandTerms {
    double value = 0.0;
    double term_scale = 0.0;
    int roots = 0;
    std::int64_t tangential_skips = 0;
};
IntegrandTerms integrand_terms(const SpectralExponents& s, const Wavenumber& p, double k1,
                               double k2);

// Angle-averaged collision integral I(x, y) at evaluation wavenumber p over
// the kinematic box, desingularized and windowed as described in
// QuadratureConfig.  Pure function; safe to call concurrently.
IntegralResult evaluate_I(const SpectralExponents& s, const Wavenumber& p,
                          const QuadratureConfig& cfg = {});

// Bihomogeneity check I(alpha k, beta m) = alpha^(4-2x) beta^(1-2y) I(k, m).
// measured/expected are reported at the integral level and pointwise at a
// fixed in-box probe node (degrees 2-2x and 1-2y there, the measure factors
// removed).
struct ScalingCheck {
    double measured_integral = 0.0;
    double expected_integral = 0.0;
    double measured_node = 0.0;
    double expected_node = 0.0;
};
ScalingCheck scaling_exponent_check(const SpectralExponents& s, const Wavenumber& p,
                                    double alpha, double beta,
                                    const QuadratureConfig& cfg = {});

}  // namespace iwkin
