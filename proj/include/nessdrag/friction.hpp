#pragma once

#include <vector>

#include "nessdrag/response.hpp"

namespace nessdrag {

enum class ForceMode { full, lte, j };

struct ForceResult {
    double f_over_f0 = 0.0;      // normalized drag magnitude, >= 0
    double error_estimate = 0.0; // same units
    ForceMode mode = ForceMode::full;
    double V = 0.0;
    bool converged = false;
    long evaluations = 0; // outer-integrand evaluations
};

// Steady-state friction normalized by |F0|:
//   (4/alpha_sp)(V/Z^8) int_0^inf dnu int dw/(2pi)
//        w |alpha((w-nu)s)|^2 Im g(w, nu s) x [spectrum kernel]((w-nu)s, s)
// with the spectrum kernel Im G^theta (full), theta Im G (lte) or their
// difference (j). Evaluated with the spectrum argument u = w - nu as the
// outer variable, which pins the narrow polarizability resonances at
// u = +-xi_res/s where the quadrature can split on them.
ForceResult force_full(const ResponseContext& ctx, double V);
ForceResult force_lte(const ResponseContext& ctx, double V);
ForceResult force_j(const ResponseContext& ctx, double V);
ForceResult force(const ResponseContext& ctx, double V, ForceMode mode);

struct SweepRow {
    double V = 0.0;
    double f_full = 0.0;
    double f_lte = 0.0;
    double f_j = 0.0;
    double rel_diff_lte = 0.0;  // (full - lte) / lte
    double rel_diff_full = 0.0; // (full - lte) / full
    double f_asym_low = 0.0;    // total_low_v overlay
    double f_asym_high = 0.0;   // high_v overlay
    double err_full = 0.0;
    bool converged = false;
};

struct SweepOptions {
    QuadratureOptions quad{};
    int threads = 0; // 0 = hardware concurrency, capped by NESSDRAG_THREADS
};

// Evaluates all three modes plus asymptotic overlays on a velocity grid.
// Rows run concurrently; output order follows the input grid and the values
// are independent of the thread count. Per-row failures are recorded in
// `converged` and the sweep continues.
std::vector<SweepRow> sweep(const SystemParams& params, const SurfaceModel& model,
                            const std::vector<double>& v_grid,
                            const SweepOptions& options = {});

} // namespace nessdrag
