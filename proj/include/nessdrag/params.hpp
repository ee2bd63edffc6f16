#pragma once

#include <array>

namespace nessdrag {

// Physical inputs in SI units. All frequencies are angular (rad/s); use
// ev_to_rad_s() when a value is specified in eV.
struct SIInputs {
    double alpha0;  // static polarizability, F m^2
    double omega_p; // plasma frequency, rad/s
    double Gamma;   // metal relaxation rate, rad/s
    double z_a;     // atom-surface distance, m
    double omega_a; // oscillator frequency, rad/s
    double v;       // drift velocity, m/s
};

// Dimensionless configuration. Frequencies are measured in units of the
// surface plasmon frequency omega_sp and lengths in units of c/omega_sp.
struct SystemParams {
    double xi_a;     // omega_a / omega_sp
    double Z;        // z_a omega_sp / c
    double eta;      // Gamma / omega_sp
    double alpha_sp; // 3 alpha0 omega_sp^3 / (eps0 c^3)
    std::array<double, 3> dipole{1.0, 0.0, 0.0}; // unit dipole direction
};

struct NormalizationInfo {
    double F0_SI;    // force scale in N, negative (points against the motion)
    double omega_sp; // rad/s
    double rho;      // material resistivity, Ohm m
};

struct DimensionlessBundle {
    SystemParams params;
    NormalizationInfo norm;
    double V; // v / c
};

double ev_to_rad_s(double energy_ev);

// Throws std::domain_error naming the offending field.
void validate(const SIInputs& in);
void validate(const SystemParams& p);

DimensionlessBundle from_si(const SIInputs& in);

// Normalized force -> SI force in N. F0_SI carries the drag sign, so a
// positive normalized value maps to a negative (decelerating) force.
double to_si(const NormalizationInfo& norm, double f_normalized);

// Inverse of from_si; used for round-trip checks.
SIInputs si_from(const SystemParams& p, const NormalizationInfo& norm, double V);

} // namespace nessdrag
