#include "nessdrag/friction.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <thread>

#include "nessdrag/asymptotics.hpp"
#include "nessdrag/constants.hpp"
#include "nessdrag/quadrature.hpp"

namespace nessdrag {

using constants::pi;

namespace {

// Outer truncation of the spectrum variable u = w - nu. Both factors of the
// outer integrand die like exp(-2|u|): the nu integral through the kernel
// window for u > 0, the theta-restricted spectrum kernel for u < 0. 45 covers
// any resonant enhancement (~1e6) with 30+ digits to spare.
constexpr double u_negative_cut = 45.0;

struct Resonance {
    bool found = false;
    double xi_res = 0.0;     // pole of |alpha|^2 on the positive axis
    double half_width = 0.0; // Lorentzian half width in xi
};

// The polarizability denominator 1 - (xi/xi_a)^2 - (alpha_sp/Z^3) Re G has a
// single root slightly below xi_a; locate it so the outer quadrature can
// split on the (very narrow) resonance.
Resonance locate_resonance(const ResponseContext& ctx)
{
    const auto& p = ctx.params;
    const double z3 = p.Z * p.Z * p.Z;
    const auto re_den = [&](double xi) {
        const double r = xi / p.xi_a;
        return 1.0 - r * r - (p.alpha_sp / z3) * bigG(ctx, xi, false).real();
    };

    double a = 0.5 * p.xi_a, b = 1.5 * p.xi_a;
    double fa = re_den(a);
    if ((fa > 0.0) == (re_den(b) > 0.0)) return {};

    for (int i = 0; i < 80; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = re_den(m);
        if ((fa > 0.0) == (fm > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
        if (b - a < 1e-15 * p.xi_a) break;
    }

    Resonance res;
    res.found = true;
    res.xi_res = 0.5 * (a + b);
    const double im_g = std::abs(bigG(ctx, res.xi_res, false).imag());
    res.half_width = (p.alpha_sp / z3) * im_g * p.xi_a * p.xi_a / (2.0 * res.xi_res);
    return res;
}

// nu integral at fixed u: int_0^inf dnu Im r(nu s) (nu+u)^3 K(nu+u). The
// kernel confines nu+u to |.| <= wb, so the domain is a finite window.
double nu_profile(const ResponseContext& ctx, double u)
{
    const double wb = ctx.quad.kernel_cutoff;
    const double lo = std::max(0.0, -u - wb);
    const double hi = -u + wb;
    if (hi <= lo) return 0.0;

    quadrature::IntegralSpec spec;
    spec.lower = lo;
    spec.upper = hi;
    std::vector<double> pts;
    if (-u > lo && -u < hi) pts.push_back(-u); // kernel center
    if (ctx.model.kind == SurfaceModel::Kind::drude) {
        const double nu_pl = 1.0 / ctx.s; // Im r peak
        if (nu_pl > lo && nu_pl < hi) pts.push_back(nu_pl);
    }
    std::sort(pts.begin(), pts.end());
    spec.breakpoints = std::move(pts);
    spec.rel_tol = ctx.quad.inner_rel_tol;
    spec.max_depth = ctx.quad.max_depth;
    const auto& model = ctx.model;
    const auto& factors = ctx.factors;
    const double s = ctx.s;
    spec.integrand = [&model, &factors, s, u](double nu) {
        const double w = nu + u;
        return reflection_im(model, nu * s) * w * kernel_K_w2(w, factors);
    };
    const auto res = quadrature::integrate(spec);
    if (!res.converged)
        throw NumericalError("force: nu integral did not converge at u=" + std::to_string(u),
                             res.value, res.error_estimate);
    return res.value;
}

// Spectrum-side factor |alpha(u s)|^2 x mode kernel at xi = u s.
double spectrum_factor(const ResponseContext& ctx, double u, ForceMode mode)
{
    const double xi = u * ctx.s;
    const auto G = bigG(ctx, xi, false);
    const auto& p = ctx.params;
    const double z3 = p.Z * p.Z * p.Z;
    const double r = xi / p.xi_a;
    const std::complex<double> den = 1.0 - r * r - (p.alpha_sp / z3) * G;
    const double a2 = p.alpha_sp * p.alpha_sp / std::norm(den);

    switch (mode) {
    case ForceMode::lte:
        return u > 0.0 ? a2 * G.imag() : 0.0;
    case ForceMode::j:
        return a2 * bigJ_im(ctx, xi);
    case ForceMode::full:
    default:
        return a2 * bigG(ctx, xi, true).imag();
    }
}

std::vector<double> outer_breakpoints(const ResponseContext& ctx, const Resonance& res,
                                      double lo, double hi, ForceMode mode)
{
    std::vector<double> pts;
    const auto add = [&](double p) {
        if (p > lo && p < hi) pts.push_back(p);
    };
    if (mode != ForceMode::lte) add(0.0);
    if (ctx.model.kind == SurfaceModel::Kind::drude) add(-1.0 / ctx.s);
    if (res.found && res.half_width > 0.0) {
        const double center = res.xi_res / ctx.s;
        const double hw = res.half_width / ctx.s;
        for (double sign : {1.0, -1.0}) {
            add(sign * center);
            for (double k : {4.0, 32.0, 256.0}) {
                add(sign * center + k * hw);
                add(sign * center - k * hw);
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

ForceResult force(const ResponseContext& ctx, double V, ForceMode mode)
{
    if (!(V > 0.0))
        throw std::domain_error("force: V must be > 0");
    const auto& p = ctx.params;
    if (std::abs(ctx.s - V / p.Z) > 1e-12 * std::max(1.0, ctx.s))
        throw std::domain_error("force: context was built for a different velocity");

    // The resonance only reaches the truncated domain when xi_res/s is small
    // enough; beyond that it is exponentially dead.
    Resonance res;
    if (p.xi_a / ctx.s < u_negative_cut + 15.0) res = locate_resonance(ctx);

    const double lo = mode == ForceMode::lte ? 0.0 : -u_negative_cut;
    const double hi = ctx.quad.kernel_cutoff;

    long outer_evals = 0;
    quadrature::IntegralSpec spec;
    spec.lower = lo;
    spec.upper = hi;
    spec.breakpoints = outer_breakpoints(ctx, res, lo, hi, mode);
    spec.rel_tol = ctx.quad.outer_rel_tol;
    spec.max_depth = ctx.quad.max_depth;
    spec.integrand = [&ctx, mode, &outer_evals](double u) {
        ++outer_evals;
        return spectrum_factor(ctx, u, mode) * nu_profile(ctx, u);
    };

    const auto integral = quadrature::integrate(spec);

    const double prefactor = (4.0 / p.alpha_sp) * (V / std::pow(p.Z, 8)) / (12.0 * pi * pi);

    ForceResult out;
    out.mode = mode;
    out.V = V;
    out.f_over_f0 = prefactor * integral.value;
    // Outer estimate plus the inner tolerances folded in quadrature sum.
    const double inner_part = 2.0 * ctx.quad.inner_rel_tol * std::abs(integral.value);
    out.error_estimate =
        prefactor * std::hypot(integral.error_estimate, inner_part);
    out.converged = integral.converged;
    out.evaluations = outer_evals;
    if (!integral.converged)
        throw NumericalError("force: outer integral did not converge (V=" + std::to_string(V)
                                 + ", mode=" + std::to_string(static_cast<int>(mode)) + ")",
                             out.f_over_f0, out.error_estimate);
    return out;
}

ForceResult force_full(const ResponseContext& ctx, double V)
{
    return force(ctx, V, ForceMode::full);
}

ForceResult force_lte(const ResponseContext& ctx, double V)
{
    return force(ctx, V, ForceMode::lte);
}

ForceResult force_j(const ResponseContext& ctx, double V)
{
    return force(ctx, V, ForceMode::j);
}

namespace {

int resolve_threads(int requested, size_t rows)
{
    int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* cap = std::getenv("NESSDRAG_THREADS")) {
        const int limit = std::atoi(cap);
        if (limit >= 1) n = std::min(n, limit);
    }
    return static_cast<int>(std::min<size_t>(n, rows));
}

} // namespace

std::vector<SweepRow> sweep(const SystemParams& params, const SurfaceModel& model,
                            const std::vector<double>& v_grid, const SweepOptions& options)
{
    for (size_t i = 0; i + 1 < v_grid.size(); ++i)
        if (!(v_grid[i] < v_grid[i + 1]))
            throw std::domain_error("sweep: grid must be strictly ascending");
    for (double v : v_grid)
        if (!(v > 0.0))
            throw std::domain_error("sweep: all velocities must be > 0");

    std::vector<SweepRow> rows(v_grid.size());
    if (v_grid.empty()) return rows;

    std::atomic<size_t> cursor{0};
    const auto worker = [&]() {
        for (;;) {
            const size_t i = cursor.fetch_add(1);
            if (i >= v_grid.size()) return;
            SweepRow& row = rows[i];
            row.V = v_grid[i];
            try {
                const auto ctx = make_context(params, model, row.V, options.quad);
                const auto full = force(ctx, row.V, ForceMode::full);
                const auto lte = force(ctx, row.V, ForceMode::lte);
                const auto j = force(ctx, row.V, ForceMode::j);
                row.f_full = full.f_over_f0;
                row.f_lte = lte.f_over_f0;
                row.f_j = j.f_over_f0;
                row.rel_diff_lte = (row.f_full - row.f_lte) / row.f_lte;
                row.rel_diff_full = (row.f_full - row.f_lte) / row.f_full;
                row.f_asym_low = asymptotics::total_low_v(ctx, row.V);
                row.f_asym_high = asymptotics::high_v(ctx, row.V);
                row.err_full = full.error_estimate;
                row.converged = full.converged && lte.converged && j.converged;
            } catch (const NumericalError& e) {
                row.f_full = e.partial;
                row.err_full = e.error;
                row.converged = false;
            } catch (const std::exception&) {
                row.converged = false;
            }
        }
    };

    const int n_threads = resolve_threads(options.threads, v_grid.size());
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

} // namespace nessdrag
