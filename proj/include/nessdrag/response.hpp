#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "nessdrag/material.hpp"
#include "nessdrag/orientation.hpp"
#include "nessdrag/params.hpp"

namespace nessdrag {

// Raised when an adaptive integral fails to reach its tolerance; carries the
// best available estimate.
struct NumericalError : std::runtime_error {
    NumericalError(const std::string& what, double partial_, double error_)
        : std::runtime_error(what), partial(partial_), error(error_) {}
    double partial;
    double error;
};

struct QuadratureOptions {
    double inner_rel_tol = 1e-9; // spectral (w) integrals
    double outer_rel_tol = 1e-7; // frequency (nu) integral of the force
    double kernel_cutoff = 30.0; // |w| beyond which exp(-2|w|) is below 1e-26
    int max_depth = 50;
};

// Everything the spectral functions need, frozen for one (params, model, V)
// combination. Immutable; share freely across threads.
struct ResponseContext {
    SystemParams params;
    SurfaceModel model;
    AngularFactors factors;
    DerivedFactors derived;
    double s; // Doppler ratio V/Z
    QuadratureOptions quad;
};

ResponseContext make_context(const SystemParams& params, const SurfaceModel& model,
                             double V, const QuadratureOptions& quad = {});

// g(w, xi) = r(xi) w^2 K(w) / (6 pi). Propagates the kernel domain error at
// w = 0.
std::complex<double> g_kernel(const ResponseContext& ctx, double w, double xi);

// G^theta(xi, s) = int dw/(2pi) theta(xi + w s) g(w, xi + w s); with_theta =
// false drops the step function. At s = 0 this reduces to the closed form
// r(xi) A^0 / (24 pi).
std::complex<double> bigG(const ResponseContext& ctx, double xi, bool with_theta);

// Doppler-shifted polarizability alpha(xi) = alpha_sp / D with
// D = 1 - (xi/xi_a)^2 - (alpha_sp/Z^3) G(xi, s).
std::complex<double> polarizability(const ResponseContext& ctx, double xi);

struct DampingShift {
    double delta; // frequency shift, units of omega_sp, scaled by xi_a^2
    double gamma; // induced damping, same units
};

// delta = xi_a^2 (alpha_sp/Z^3) Re G, gamma = xi_a^2 (alpha_sp/Z^3) Im G/xi.
// At xi = 0 gamma is returned as its finite limit via dr/dxi.
DampingShift damping_shift(const ResponseContext& ctx, double xi);

// Dipole power spectrum in units of (hbar/pi) alpha_sp-scaled response:
// S(xi; V) = |alpha(xi)|^2 Im G^theta(xi, s) / Z^3. Non-negative; reduces to
// theta(xi) Im alpha(xi) at V = 0.
double power_spectrum(const ResponseContext& ctx, double xi);

// Im of the J-kernel integral: int dw/(2pi) [theta(xi+ws) - theta(xi)]
// Im g(w, xi + w s). The non-equilibrium part of the spectrum.
double bigJ_im(const ResponseContext& ctx, double xi);

} // namespace nessdrag
