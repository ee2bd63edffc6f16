#pragma once

namespace nessdrag {

// Modified Bessel functions of the second kind, double precision.
// Ascending series for x <= 2, Steed continued fraction above; relative
// accuracy better than 1e-13 on [1e-6, 120]. Arguments must be > 0.
double bessel_k0(double x);
double bessel_k1(double x);
double bessel_k2(double x);

} // namespace nessdrag
