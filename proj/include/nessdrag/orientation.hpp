#pragma once

#include <array>
#include <functional>

namespace nessdrag {

// Angular weights of the lateral kernel for a fixed dipole direction.
// For unit directions A0 lies in [-3/2, 3] and A2 in [0, 3/2]; the
// combination A0 K0 + A2 K2 stays strictly positive for every direction.
struct AngularFactors {
    double A0;
    double A2;
};

struct DerivedFactors {
    double a_zero; // (A0 + 3 A2) / 4
    double a_lte;  // (A0 + 3 A2)(5 A0 + 7 A2) / 48
    double a_j;    // [(3 A0 + 5 A2) / 8]^2
};

// Throws std::domain_error unless |direction| = 1 within 1e-9.
AngularFactors angular_factors(const std::array<double, 3>& direction);

DerivedFactors derived_factors(const AngularFactors& f);

// K(w) = A0 K0(2|w|) + A2 K2(2|w|). Even in w, strictly positive, decays
// like exp(-2|w|). Diverges at w = 0 (domain error).
double kernel_K(double w, const AngularFactors& f);

// w^2 K(w): finite everywhere (limit A2/2 at w = 0); the combination the
// spectral integrands actually need.
double kernel_K_w2(double w, const AngularFactors& f);

// Closed form of the moment integral  int_0^inf w^n K_nu(2w) dw
//   = (1/4) Gamma((n+1-nu)/2) Gamma((n+1+nu)/2),  valid for n >= nu.
double bessel_moment(int n, int nu);

// (1/4pi) \oint f(A0(theta,phi), A2(theta,phi)) dOmega using Gauss-Legendre
// in cos(theta) times a uniform trapezoid in phi. Exact for the low-order
// trig polynomials that arise here once order >= 8.
double sphere_average(const std::function<double(const AngularFactors&)>& f,
                      int order = 32);

} // namespace nessdrag
