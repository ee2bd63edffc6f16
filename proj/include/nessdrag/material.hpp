#pragma once

#include <complex>

namespace nessdrag {

// Quasi-static TM reflection coefficient of the surface as a function of the
// dimensionless frequency xi = omega / omega_sp.
struct SurfaceModel {
    enum class Kind { drude, linear_ohmic };

    Kind kind = Kind::drude;
    double eta = 0.1; // Gamma / omega_sp
    double r0 = 1.0;  // static reflection; fixed at 1 for the Drude form

    static SurfaceModel drude(double eta);
    static SurfaceModel linear_ohmic(double r0, double eta);
};

// Drude: r(xi) = 1 / (1 - xi^2 - i eta xi); linear Ohmic: r0 + i eta xi.
// Both satisfy r(-xi) = conj(r(xi)) exactly and Im r(xi) > 0 for xi > 0.
std::complex<double> reflection(const SurfaceModel& m, double xi);

double reflection_im(const SurfaceModel& m, double xi);

// dr/dxi, used for the xi -> 0 limit of the induced damping.
std::complex<double> reflection_deriv(const SurfaceModel& m, double xi);

double static_reflection(const SurfaceModel& m);

} // namespace nessdrag
