#include "iwkin/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace iwkin {

double frequency(const Wavenumber& p, const PhysicalConstants& c) {
    if (p.m == 0.0)
        throw std::domain_error("frequency: m = 0");
    if (p.k < 0.0)
        throw std::domain_error("frequency: k < 0");
    return c.N * p.k / std::fabs(p.m);
}

double action(const Wavenumber& p, const SpectralExponents& s) {
    if (p.k <= 0.0)
        throw std::domain_error("action: k must be positive");
    if (p.m == 0.0)
        throw std::domain_error("action: m = 0");
    if (s.n0 <= 0.0)
        throw std::domain_error("action: n0 must be positive");
    return s.n0 * std::pow(p.k, -s.x) * std::pow(std::fabs(p.m), -s.y);
}

double matrix_element_U(const Wavenumber& pa, const Wavenumber& pb, const Wavenumber& pc,
                        double cos_bc, const PhysicalConstants& c) {
    if (std::fabs(cos_bc) > 1.0)
        throw std::domain_error("matrix_element_U: |cos_bc| > 1");
    const double wa = frequency(pa, c);
    const double wb = frequency(pb, c);
    const double wc = frequency(pc, c);
    const double pref = c.N / (4.0 * std::sqrt(2.0 * c.g));
    return -pref * cos_bc * std::sqrt(wb * wc / wa) * pa.k;
}

double matrix_element_V(const Wavenumber& p, const Wavenumber& p1, const Wavenumber& p2,
                        double cos01, double cos02, double cos12,
                        const PhysicalConstants& c) {
    return matrix_element_U(p, p1, p2, cos12, c)
         + matrix_element_U(p1, p, p2, cos02, c)
         + matrix_element_U(p2, p, p1, cos01, c);
}

double f_term(double n, double n1, double n2) {
    return n1 * n2 - n * (n1 + n2);
}

std::pair<double, double> energy_exponents(const SpectralExponents& s) {
    return {s.x - 2.0, s.x + s.y - 2.0};
}

SpectralExponents action_exponents(double a, double b) {
    return {a + 2.0, b - a, 1.0};
}

}  // namespace iwkin
