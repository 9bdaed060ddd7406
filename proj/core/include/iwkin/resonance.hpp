#pragma once

#include <utility>
#include <vector>

#include "iwkin/spectral.hpp"

namespace iwkin {

// The three resonance branches of the collision integral:
//   Sum   : m  = m1 + m2,  w(p)  = w(p1) + w(p2)
//   Diff1 : m1 = m  + m2,  w(p1) = w(p)  + w(p2)
//   Diff2 : m2 = m1 + m,   w(p2) = w(p1) + w(p)
enum class Branch { Sum, Diff1, Diff2 };

// Side lengths and pairwise angle cosines of a closed horizontal wavevector
// triangle.
struct TriangleGeometry {
    double k = 0.0, k1 = 0.0, k2 = 0.0;
    double cos01 = 0.0;  // between k-vec and k1-vec
    double cos02 = 0.0;  // between k-vec and k2-vec
    double cos12 = 0.0;  // between k1-vec and k2-vec
};

struct ResonantTriad {
    Wavenumber p, p1, p2;
    Branch branch = Branch::Sum;
    TriangleGeometry geometry;
};

// True iff (k, k1, k2) lie strictly inside the kinematic box (all triangle
// inequalities strict; the degenerate boundary counts as outside).
bool in_kinematic_box(double k, double k1, double k2);

// Delta^k_{k1 k2} = sqrt(2[(k k1)^2+(k k2)^2+(k1 k2)^2] - k^4 - k1^4 - k2^4)/2,
// twice the triangle area.  Evaluated in Kahan's stable form; returns 0 on the
// degenerate boundary, throws outside the box.
double delta_jacobian(double k, double k1, double k2);

// Cosines for the closure k-vec = k1-vec + k2-vec (the Sum orientation).
TriangleGeometry triangle_cosines(double k, double k1, double k2);

// Cosines for the given branch's own closure
// (Sum: k = k1 + k2, Diff1: k1 = k + k2, Diff2: k2 = k1 + k as vectors).
TriangleGeometry branch_geometry(Branch branch, double k, double k1, double k2);

struct VerticalRoot {
    double m1 = 0.0;
    double m2 = 0.0;
    double slope = 0.0;  // |d(frequency residual)/d m1| at the root
};

// All validated solutions (m1, m2) of the branch resonance at fixed
// (k, k1, k2, m).  Enumerates the sign cases of m1, m2, solves the quadratic
// of each case, keeps roots consistent with the case and with the original
// resonance to 1e-10 relative residual.  m may be negative (spectra are even
// in m); the roots are mirrored accordingly.
std::vector<VerticalRoot> solve_vertical_roots(Branch branch, double k, double k1, double k2,
                                               double m);

std::vector<std::pair<double, double>> solve_vertical(Branch branch, double k, double k1,
                                                      double k2, double m);

}  // namespace iwkin
