#include "nessdrag/response.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nessdrag/constants.hpp"
#include "nessdrag/quadrature.hpp"

namespace nessdrag {

using constants::pi;

ResponseContext make_context(const SystemParams& params, const SurfaceModel& model,
                             double V, const QuadratureOptions& quad)
{
    validate(params);
    if (V < 0.0)
        throw std::domain_error("make_context: V must be >= 0");
    ResponseContext ctx;
    ctx.params = params;
    ctx.model = model;
    ctx.factors = angular_factors(params.dipole);
    ctx.derived = derived_factors(ctx.factors);
    ctx.s = V / params.Z;
    ctx.quad = quad;
    return ctx;
}

std::complex<double> g_kernel(const ResponseContext& ctx, double w, double xi)
{
    return reflection(ctx.model, xi) * (w * w) * kernel_K(w, ctx.factors) / (6.0 * pi);
}

namespace {

// Candidate split points for the w integrals: the kernel center and the
// surface-plasmon resonances of r(xi + w s).
void add_if_inside(std::vector<double>& pts, double p, double lo, double hi)
{
    if (p > lo && p < hi) pts.push_back(p);
}

std::vector<double> spectral_breakpoints(const ResponseContext& ctx, double xi,
                                         double lo, double hi)
{
    std::vector<double> pts;
    add_if_inside(pts, 0.0, lo, hi);
    if (ctx.s > 0.0 && ctx.model.kind == SurfaceModel::Kind::drude) {
        add_if_inside(pts, (1.0 - xi) / ctx.s, lo, hi);
        add_if_inside(pts, (-1.0 - xi) / ctx.s, lo, hi);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

std::complex<double> bigG(const ResponseContext& ctx, double xi, bool with_theta)
{
    if (ctx.s == 0.0) {
        if (with_theta && xi < 0.0) return {0.0, 0.0};
        return reflection(ctx.model, xi) * ctx.derived.a_zero / (24.0 * pi);
    }

    const double wb = ctx.quad.kernel_cutoff;
    double lo = -wb, hi = wb;
    if (with_theta) {
        const double w_star = -xi / ctx.s; // Heaviside edge
        lo = std::max(-wb, w_star);
        hi = std::max(wb, w_star + wb);
    }

    quadrature::ComplexIntegralSpec spec;
    spec.lower = lo;
    spec.upper = hi;
    spec.breakpoints = spectral_breakpoints(ctx, xi, lo, hi);
    spec.rel_tol = ctx.quad.inner_rel_tol;
    spec.max_depth = ctx.quad.max_depth;
    const auto& model = ctx.model;
    const auto& factors = ctx.factors;
    const double s = ctx.s;
    spec.integrand = [&model, &factors, s, xi](double w) {
        return reflection(model, xi + w * s) * kernel_K_w2(w, factors) / (6.0 * pi);
    };

    const auto res = quadrature::integrate(spec);
    if (!res.converged)
        throw NumericalError("bigG: w integral did not converge (xi=" + std::to_string(xi)
                                 + ", s=" + std::to_string(s) + ")",
                             std::abs(res.value), res.error_estimate);
    return res.value / (2.0 * pi);
}

double bigJ_im(const ResponseContext& ctx, double xi)
{
    if (ctx.s == 0.0) return 0.0;

    const double wb = ctx.quad.kernel_cutoff;
    const double w_star = -xi / ctx.s;
    double lo, hi;
    if (xi >= 0.0) {
        // theta(xi + w s) - 1 = -1 below the edge
        lo = std::min(-wb, w_star - wb);
        hi = w_star;
        if (hi <= lo) return 0.0;
    } else {
        // theta(xi + w s) above the edge
        lo = w_star;
        hi = std::max(wb, w_star + wb);
    }

    quadrature::IntegralSpec spec;
    spec.lower = lo;
    spec.upper = hi;
    spec.breakpoints = spectral_breakpoints(ctx, xi, lo, hi);
    spec.rel_tol = ctx.quad.inner_rel_tol;
    spec.max_depth = ctx.quad.max_depth;
    const auto& model = ctx.model;
    const auto& factors = ctx.factors;
    const double s = ctx.s;
    const double sign = xi >= 0.0 ? -1.0 : 1.0;
    spec.integrand = [&model, &factors, s, xi, sign](double w) {
        return sign * reflection_im(model, xi + w * s) * kernel_K_w2(w, factors) / (6.0 * pi);
    };

    const auto res = quadrature::integrate(spec);
    if (!res.converged)
        throw NumericalError("bigJ_im: w integral did not converge (xi=" + std::to_string(xi)
                                 + ", s=" + std::to_string(s) + ")",
                             res.value, res.error_estimate);
    return res.value / (2.0 * pi);
}

std::complex<double> polarizability(const ResponseContext& ctx, double xi)
{
    const auto G = bigG(ctx, xi, false);
    const double r = xi / ctx.params.xi_a;
    const double z3 = ctx.params.Z * ctx.params.Z * ctx.params.Z;
    const std::complex<double> den =
        1.0 - r * r - (ctx.params.alpha_sp / z3) * G;
    if (std::abs(den) < 1e-14)
        throw NumericalError("polarizability: denominator vanishes at xi=" + std::to_string(xi),
                             0.0, 0.0);
    return ctx.params.alpha_sp / den;
}

DampingShift damping_shift(const ResponseContext& ctx, double xi)
{
    const double z3 = ctx.params.Z * ctx.params.Z * ctx.params.Z;
    const double scale = ctx.params.xi_a * ctx.params.xi_a * ctx.params.alpha_sp / z3;

    if (xi == 0.0) {
        // Im G ~ xi near zero; the limit of Im G / xi is the integral of
        // Im r'(w s) against the kernel.
        double slope;
        if (ctx.s == 0.0) {
            slope = ctx.model.eta * ctx.derived.a_zero / (24.0 * pi);
        } else {
            quadrature::IntegralSpec spec;
            spec.lower = -ctx.quad.kernel_cutoff;
            spec.upper = ctx.quad.kernel_cutoff;
            spec.breakpoints = spectral_breakpoints(ctx, 0.0, spec.lower, spec.upper);
            spec.rel_tol = ctx.quad.inner_rel_tol;
            spec.max_depth = ctx.quad.max_depth;
            const auto& model = ctx.model;
            const auto& factors = ctx.factors;
            const double s = ctx.s;
            spec.integrand = [&model, &factors, s](double w) {
                return reflection_deriv(model, w * s).imag() * kernel_K_w2(w, factors)
                    / (6.0 * pi);
            };
            slope = quadrature::integrate(spec).value / (2.0 * pi);
        }
        const auto G = bigG(ctx, 0.0, false);
        return {scale * G.real(), scale * slope};
    }

    const auto G = bigG(ctx, xi, false);
    return {scale * G.real(), scale * G.imag() / xi};
}

double power_spectrum(const ResponseContext& ctx, double xi)
{
    const double z3 = ctx.params.Z * ctx.params.Z * ctx.params.Z;
    const auto a = polarizability(ctx, xi);
    const double a2 = std::norm(a);
    return a2 * bigG(ctx, xi, true).imag() / z3;
}

} // namespace nessdrag
