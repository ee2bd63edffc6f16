#include "nessdrag/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nessdrag/constants.hpp"

namespace nessdrag {

namespace {

void require_positive(double value, const char* field)
{
    if (!(value > 0.0))
        throw std::domain_error(std::string("params: ") + field + " must be > 0");
}

} // namespace

double ev_to_rad_s(double energy_ev)
{
    return energy_ev * constants::ev_to_rad_per_s;
}

void validate(const SIInputs& in)
{
    require_positive(in.alpha0, "alpha0");
    require_positive(in.omega_p, "omega_p");
    require_positive(in.Gamma, "Gamma");
    require_positive(in.z_a, "z_a");
    require_positive(in.omega_a, "omega_a");
    require_positive(in.v, "v");
    if (!(in.v < constants::c_light))
        throw std::domain_error("params: v must be smaller than c");
}

void validate(const SystemParams& p)
{
    require_positive(p.xi_a, "xi_a");
    require_positive(p.Z, "Z");
    require_positive(p.eta, "eta");
    require_positive(p.alpha_sp, "alpha_sp");
    const double n2 = p.dipole[0] * p.dipole[0] + p.dipole[1] * p.dipole[1]
        + p.dipole[2] * p.dipole[2];
    if (std::abs(n2 - 1.0) > 1e-12)
        throw std::domain_error("params: dipole must be a unit vector");
}

DimensionlessBundle from_si(const SIInputs& in)
{
    validate(in);
    using namespace constants;

    const double omega_sp = in.omega_p / std::sqrt(2.0);
    const double c3 = c_light * c_light * c_light;
    const double c4 = c3 * c_light;

    DimensionlessBundle out;
    out.params.xi_a = in.omega_a / omega_sp;
    out.params.Z = in.z_a * omega_sp / c_light;
    out.params.eta = in.Gamma / omega_sp;
    out.params.alpha_sp = 3.0 * in.alpha0 * omega_sp * omega_sp * omega_sp / (epsilon0 * c3);
    out.norm.omega_sp = omega_sp;
    out.norm.rho = in.Gamma / (epsilon0 * in.omega_p * in.omega_p);
    out.norm.F0_SI = -3.0 * hbar * std::pow(omega_sp, 5) * in.alpha0 / (2.0 * pi * epsilon0 * c4);
    out.V = in.v / c_light;
    return out;
}

double to_si(const NormalizationInfo& norm, double f_normalized)
{
    return f_normalized * norm.F0_SI;
}

SIInputs si_from(const SystemParams& p, const NormalizationInfo& norm, double V)
{
    using namespace constants;
    SIInputs in;
    const double c3 = c_light * c_light * c_light;
    in.omega_p = norm.omega_sp * std::sqrt(2.0);
    in.Gamma = p.eta * norm.omega_sp;
    in.omega_a = p.xi_a * norm.omega_sp;
    in.z_a = p.Z * c_light / norm.omega_sp;
    in.alpha0 = p.alpha_sp * epsilon0 * c3 / (3.0 * std::pow(norm.omega_sp, 3));
    in.v = V * c_light;
    return in;
}

} // namespace nessdrag
