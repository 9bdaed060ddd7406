#pragma once

namespace iwkin_test {

struct NaiveResult {
    double value = 0.0;
    double error = 0.0;
    double abs_scale = 0.0;
};

// Brute-force reference integration of the naive integrand over the same
// scale-separation window as the library (daughters down to k/sigma, parents
// up to sigma*k): boundary-offset midpoint sums on graded meshes, no
// singularity substitutions.  The error field combines a resolution-doubling
// and an offset-shrinking estimate.
NaiveResult naive_integral(double x, double y, double k, double m, double sigma,
                           double domain_scale = 4.0, int base_cells = 360);

}  // namespace iwkin_test
