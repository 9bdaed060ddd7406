#pragma once

namespace iwkin_test {

// Straight-line reimplementation of the pointwise collision-integral kernel:
// hand-written sign-case quadratics, law-of-cosines geometry inlined per
// branch, interaction element written out term by term, Jacobian by central
// difference.  Shares no code with the library; used as the independent
// oracle.
double naive_integrand(double x, double y, double k, double m, double k1, double k2);

}  // namespace iwkin_test
