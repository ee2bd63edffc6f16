#pragma once

#include "nessdrag/response.hpp"

namespace nessdrag {
namespace asymptotics {

// Closed-form low-velocity force laws, normalized by |F0|. The common factor
// is [alpha_sp/(24 pi Z^3)] [eta^2/(24 pi)] V^3 / Z^7; include_shift divides
// by |1 - alpha_sp r0 A^0 / (24 pi Z^3)|^2. `averaged` replaces the
// orientation factors by their sphere averages (A_LTE -> 21/20,
// A_J -> 87/80, A^0 -> 1).
struct LowVOptions {
    bool include_shift = false;
    bool averaged = false;
};

double lte_low_v(const ResponseContext& ctx, double V, LowVOptions opt = {});
double j_low_v(const ResponseContext& ctx, double V, LowVOptions opt = {});
double total_low_v(const ResponseContext& ctx, double V, LowVOptions opt = {});

// Same force expressed through the square of the induced decay rate;
// algebraically identical to the averaged total_low_v.
double gamma_form(const ResponseContext& ctx, double V);

// Dimensionless induced damping gamma(z_a)/omega_sp at leading order in
// frequency and velocity (orientation averaged).
double induced_damping(const ResponseContext& ctx);

// SI forms, in newtons (negative = drag), orientation averaged.
namespace si {
double lte_low_v(double alpha0, double rho, double v, double z_a);
double j_low_v(double alpha0, double rho, double v, double z_a);
double total_low_v(double alpha0, double rho, double v, double z_a);
double gamma_form(double alpha0, double omega_a, double rho, double v, double z_a);
double induced_damping(double alpha0, double omega_a, double rho, double z_a); // rad/s
} // namespace si

// Resonant second-order law, valid above the kink. Underflow of the
// exponential yields exactly zero and sets *underflow when provided.
double high_v(const ResponseContext& ctx, double V, bool* underflow = nullptr);

// Location of the kink: the single crossing of total_low_v and high_v in
// (1e-6, 1e-1). Verified by sign scan; throws std::domain_error when the
// bracket is degenerate.
double crossover_velocity(const ResponseContext& ctx);

} // namespace asymptotics
} // namespace nessdrag
