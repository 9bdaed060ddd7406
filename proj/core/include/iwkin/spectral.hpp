#pragma once

#include <utility>

namespace iwkin {

// 3-d wavevector of a horizontally isotropic wave: horizontal modulus k >= 0
// and signed vertical wavenumber m != 0.
struct Wavenumber {
    double k = 0.0;
    double m = 0.0;
};

// Power-law action spectrum n(k, m) = n0 * k^-x * |m|^-y.
struct SpectralExponents {
    double x = 0.0;
    double y = 0.0;
    double n0 = 1.0;
};

struct PhysicalConstants {
    double N = 1.0;  // buoyancy frequency
    double g = 1.0;  // gravity
};

// Linear dispersion relation, omega = N k / |m|.  Hydrostatic, rotationless.
double frequency(const Wavenumber& p, const PhysicalConstants& c = {});

// Spectrum value at p.  Rejects k = 0 (diverges at the origin).
double action(const Wavenumber& p, const SpectralExponents& s);

// Elementary interaction coefficient
//   U^a_{bc} = -N/(4 sqrt(2g)) * cos(b,c) * sqrt(w_b w_c / w_a) * k_a
// where cos_bc is the angle cosine between the horizontal wavevectors of the
// two subscript arguments.
double matrix_element_U(const Wavenumber& pa, const Wavenumber& pb, const Wavenumber& pc,
                        double cos_bc, const PhysicalConstants& c = {});

// Full element V^p_{p1 p2} = U^p_{p1 p2} + U^{p1}_{p p2} + U^{p2}_{p p1}.
// cos01, cos02, cos12 are the pairwise angle cosines of the closed horizontal
// triangle (k, k1, k2); the caller fixes their orientation.
double matrix_element_V(const Wavenumber& p, const Wavenumber& p1, const Wavenumber& p2,
                        double cos01, double cos02, double cos12,
                        const PhysicalConstants& c = {});

// Occupation combination f^p_{p1 p2} = n1 n2 - n (n1 + n2).
double f_term(double n, double n1, double n2);

// Energy-spectrum exponents (a, b) with E(m, omega) ~ omega^-a m^-b:
// a = x - 2, b = x + y - 2.
std::pair<double, double> energy_exponents(const SpectralExponents& s);

// Inverse map; returns exponents with n0 = 1.
SpectralExponents action_exponents(double a, double b);

}  // namespace iwkin
