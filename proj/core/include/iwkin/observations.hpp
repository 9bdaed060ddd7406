#pragma once

#include <string>
#include <vector>

namespace iwkin {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h) : lo(l), hi(h) {}
    double mid() const { return 0.5 * (lo + hi); }
    bool is_point() const { return lo == hi; }
};

enum class WavenumberBasis { Vertical, Horizontal };

const char* to_string(WavenumberBasis b);

// One historical experiment with its published high-frequency energy-spectrum
// exponents E ~ omega^-a wavenumber^-b and the derived action exponents.
struct ObservationRecord {
    std::string name;
    Interval omega_exponent;      // a
    Interval vertical_exponent;   // b (for IWEX: against horizontal wavenumber)
    WavenumberBasis wavenumber_basis = WavenumberBasis::Vertical;
    Interval derived_x;
    Interval derived_y;
    std::string notes;
};

// The seven embedded records, derived (x, y) computed endpoint-wise through
// the action/energy exponent conversion.
std::vector<ObservationRecord> builtin_observations();

}  // namespace iwkin
