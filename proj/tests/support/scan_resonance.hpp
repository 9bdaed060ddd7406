#pragma once

#include <vector>

#include "iwkin/resonance.hpp"

namespace iwkin_test {

// Brute-force oracle for solve_vertical: scans the branch frequency residual
// on a dense m1 grid (pole-free sub-intervals), bisects every sign change.
// Independent of the quadratic route.
std::vector<double> scan_resonance_roots(iwkin::Branch branch, double k, double k1, double k2,
                                         double m, int grid_points = 10000);

}  // namespace iwkin_test
