#include "nessdrag/material.hpp"

#include <stdexcept>

namespace nessdrag {

SurfaceModel SurfaceModel::drude(double eta)
{
    if (!(eta > 0.0))
        throw std::domain_error("SurfaceModel: eta must be > 0");
    SurfaceModel m;
    m.kind = Kind::drude;
    m.eta = eta;
    m.r0 = 1.0;
    return m;
}

SurfaceModel SurfaceModel::linear_ohmic(double r0, double eta)
{
    if (!(eta > 0.0))
        throw std::domain_error("SurfaceModel: eta must be > 0");
    if (!(r0 > 0.0) || !(r0 <= 1.0))
        throw std::domain_error("SurfaceModel: linear_ohmic requires 0 < r0 <= 1");
    SurfaceModel m;
    m.kind = Kind::linear_ohmic;
    m.eta = eta;
    m.r0 = r0;
    return m;
}

std::complex<double> reflection(const SurfaceModel& m, double xi)
{
    if (m.kind == SurfaceModel::Kind::drude) {
        // (eps-1)/(eps+1) reduced so xi = 0 is regular.
        const std::complex<double> den(1.0 - xi * xi, -m.eta * xi);
        return 1.0 / den;
    }
    return {m.r0, m.eta * xi};
}

double reflection_im(const SurfaceModel& m, double xi)
{
    if (m.kind == SurfaceModel::Kind::drude) {
        const double re = 1.0 - xi * xi;
        const double im = -m.eta * xi;
        return m.eta * xi / (re * re + im * im);
    }
    return m.eta * xi;
}

std::complex<double> reflection_deriv(const SurfaceModel& m, double xi)
{
    if (m.kind == SurfaceModel::Kind::drude) {
        const std::complex<double> den(1.0 - xi * xi, -m.eta * xi);
        return std::complex<double>(2.0 * xi, m.eta) / (den * den);
    }
    return {0.0, m.eta};
}

double static_reflection(const SurfaceModel& m)
{
    return m.kind == SurfaceModel::Kind::drude ? 1.0 : m.r0;
}

} // namespace nessdrag
