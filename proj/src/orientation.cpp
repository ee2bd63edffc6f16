#include "nessdrag/orientation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nessdrag/bessel.hpp"
#include "nessdrag/constants.hpp"

namespace nessdrag {

AngularFactors angular_factors(const std::array<double, 3>& direction)
{
    const double nx = direction[0], ny = direction[1], nz = direction[2];
    const double n2 = nx * nx + ny * ny + nz * nz;
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-9)
        throw std::domain_error("angular_factors: direction must be a unit vector");

    // A0 = (3/2)[1 + (3 cos^2 phi - 2) sin^2 theta],  A2 = (3/2)[1 - cos^2 phi sin^2 theta]
    // with nx = sin(theta) cos(phi), ny = sin(theta) sin(phi), nz = cos(theta).
    return AngularFactors{1.5 * (1.0 + nx * nx - 2.0 * ny * ny),
                          1.5 * (1.0 - nx * nx)};
}

DerivedFactors derived_factors(const AngularFactors& f)
{
    DerivedFactors d;
    d.a_zero = (f.A0 + 3.0 * f.A2) / 4.0;
    d.a_lte = (f.A0 + 3.0 * f.A2) * (5.0 * f.A0 + 7.0 * f.A2) / 48.0;
    const double t = (3.0 * f.A0 + 5.0 * f.A2) / 8.0;
    d.a_j = t * t;
    return d;
}

double kernel_K(double w, const AngularFactors& f)
{
    if (w == 0.0)
        throw std::domain_error("kernel_K: diverges at w = 0");
    const double x = 2.0 * std::abs(w);
    return f.A0 * bessel_k0(x) + f.A2 * bessel_k2(x);
}

double kernel_K_w2(double w, const AngularFactors& f)
{
    const double aw = std::abs(w);
    if (aw < 1e-6) {
        // w^2 K2(2w) -> 1/2 - w^2/2 + O(w^4 log w); the K0 piece is O(w^2 log w).
        const double k0_part = (aw > 0.0) ? w * w * bessel_k0(2.0 * aw) : 0.0;
        return f.A0 * k0_part + f.A2 * (0.5 - 0.5 * w * w);
    }
    return w * w * kernel_K(w, f);
}

double bessel_moment(int n, int nu)
{
    if (n < 0 || nu < 0)
        throw std::domain_error("bessel_moment: orders must be non-negative");
    if (n < nu)
        throw std::domain_error("bessel_moment: integral diverges for n < nu");
    return 0.25 * std::tgamma(0.5 * (n + 1 - nu)) * std::tgamma(0.5 * (n + 1 + nu));
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w)
{
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

} // namespace

double sphere_average(const std::function<double(const AngularFactors&)>& f, int order)
{
    if (order < 2)
        throw std::domain_error("sphere_average: order must be >= 2");

    std::vector<double> ct, wt;
    gauss_legendre(order, ct, wt); // nodes in cos(theta)

    const int n_phi = 2 * order; // periodic trapezoid
    double sum = 0.0;
    for (int i = 0; i < order; ++i) {
        const double cos_t = ct[i];
        const double sin_t2 = 1.0 - cos_t * cos_t;
        double ring = 0.0;
        for (int j = 0; j < n_phi; ++j) {
            const double phi = 2.0 * constants::pi * j / n_phi;
            const double c2 = std::cos(phi) * std::cos(phi);
            const AngularFactors af{1.5 * (1.0 + (3.0 * c2 - 2.0) * sin_t2),
                                    1.5 * (1.0 - c2 * sin_t2)};
            ring += f(af);
        }
        sum += wt[i] * ring / n_phi;
    }
    return 0.5 * sum; // (1/4pi) dOmega = (1/2) d(cos t) x (1/2pi) dphi
}

} // namespace nessdrag
