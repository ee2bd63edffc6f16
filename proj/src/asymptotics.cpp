#include "nessdrag/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "nessdrag/constants.hpp"

namespace nessdrag {
namespace asymptotics {

using constants::pi;

namespace {

constexpr double a_lte_avg = 21.0 / 20.0;
constexpr double a_j_avg = 87.0 / 80.0;

double common_factor(const ResponseContext& ctx, double V, const LowVOptions& opt)
{
    if (!(V > 0.0))
        throw std::domain_error("low_v law: V must be > 0");
    const auto& p = ctx.params;
    const double z3 = p.Z * p.Z * p.Z;
    double c = (p.alpha_sp / (24.0 * pi * z3)) * (p.eta * p.eta / (24.0 * pi)) * V * V * V
        / std::pow(p.Z, 7);
    if (opt.include_shift) {
        const double a0 = opt.averaged ? 1.0 : ctx.derived.a_zero;
        const double den = 1.0 - p.alpha_sp * static_reflection(ctx.model) * a0 / (24.0 * pi * z3);
        c /= den * den;
    }
    return c;
}

} // namespace

double lte_low_v(const ResponseContext& ctx, double V, LowVOptions opt)
{
    const double a = opt.averaged ? a_lte_avg : ctx.derived.a_lte;
    return (45.0 * a / 16.0) * common_factor(ctx, V, opt);
}

double j_low_v(const ResponseContext& ctx, double V, LowVOptions opt)
{
    const double a = opt.averaged ? a_j_avg : ctx.derived.a_j;
    return (9.0 * a / 4.0) * common_factor(ctx, V, opt);
}

double total_low_v(const ResponseContext& ctx, double V, LowVOptions opt)
{
    return lte_low_v(ctx, V, opt) + j_low_v(ctx, V, opt);
}

double induced_damping(const ResponseContext& ctx)
{
    const auto& p = ctx.params;
    const double z3 = p.Z * p.Z * p.Z;
    return p.alpha_sp * p.xi_a * p.xi_a * p.eta / (24.0 * pi * z3);
}

double gamma_form(const ResponseContext& ctx, double V)
{
    if (!(V > 0.0))
        throw std::domain_error("gamma_form: V must be > 0");
    const auto& p = ctx.params;
    const double g = induced_damping(ctx);
    const double z4x4 = std::pow(p.Z * p.xi_a, 4);
    return (27.0 / (5.0 * p.alpha_sp)) * g * g * V * V * V / z4x4;
}

namespace si {

using constants::c_light;
using constants::hbar;

double lte_low_v(double alpha0, double rho, double v, double z_a)
{
    return -(90.0 * a_lte_avg / (pi * pi * pi)) * hbar * alpha0 * alpha0 * rho * rho * v * v * v
        / std::pow(2.0 * z_a, 10);
}

double j_low_v(double alpha0, double rho, double v, double z_a)
{
    return -(72.0 * a_j_avg / (pi * pi * pi)) * hbar * alpha0 * alpha0 * rho * rho * v * v * v
        / std::pow(2.0 * z_a, 10);
}

double total_low_v(double alpha0, double rho, double v, double z_a)
{
    return -(864.0 / (5.0 * pi * pi * pi)) * hbar * alpha0 * alpha0 * rho * rho * v * v * v
        / std::pow(2.0 * z_a, 10);
}

double induced_damping(double alpha0, double omega_a, double rho, double z_a)
{
    return alpha0 * omega_a * omega_a * rho / (4.0 * pi * z_a * z_a * z_a);
}

double gamma_form(double alpha0, double omega_a, double rho, double v, double z_a)
{
    const double g = induced_damping(alpha0, omega_a, rho, z_a);
    return -(216.0 / (5.0 * pi)) * hbar * g * g * v * v * v / std::pow(2.0 * z_a * omega_a, 4);
}

} // namespace si

double high_v(const ResponseContext& ctx, double V, bool* underflow)
{
    if (!(V > 0.0))
        throw std::domain_error("high_v: V must be > 0");
    if (underflow) *underflow = false;
    const auto& p = ctx.params;
    const double exponent = -2.0 * p.Z * p.xi_a / V;
    if (exponent < -745.0) { // exp underflows to denormal zero
        if (underflow) *underflow = true;
        return 0.0;
    }
    const double root = std::sqrt(std::pow(p.xi_a, 7) / (pi * std::pow(p.Z, 5) * V * V * V));
    return (p.eta / 24.0) * root * (1.0 + 5.0 * V / (2.0 * p.Z * p.xi_a)) * std::exp(exponent);
}

double crossover_velocity(const ResponseContext& ctx)
{
    const double v_lo = 1e-6, v_hi = 1e-1;
    const auto diff = [&](double V) { return total_low_v(ctx, V) - high_v(ctx, V); };

    // Coarse sign scan: the laws must cross exactly once in the bracket.
    constexpr int n_scan = 121;
    int crossings = 0;
    double a = v_lo, b = v_hi;
    double prev_v = v_lo, prev_d = diff(v_lo);
    for (int i = 1; i < n_scan; ++i) {
        const double v = v_lo * std::pow(v_hi / v_lo, static_cast<double>(i) / (n_scan - 1));
        const double d = diff(v);
        if ((prev_d > 0.0) != (d > 0.0)) {
            ++crossings;
            a = prev_v;
            b = v;
        }
        prev_v = v;
        prev_d = d;
    }
    if (crossings != 1)
        throw std::domain_error("crossover_velocity: laws do not cross exactly once in (1e-6, 1e-1)");

    double fa = diff(a);
    for (int i = 0; i < 200; ++i) {
        const double m = std::sqrt(a * b); // bisect in log space
        const double fm = diff(m);
        if ((fa > 0.0) == (fm > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
        if ((b - a) / a < 1e-5) break;
    }
    return std::sqrt(a * b);
}

} // namespace asymptotics
} // namespace nessdrag
