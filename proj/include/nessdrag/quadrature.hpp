#pragma once

#include <complex>
#include <functional>
#include <limits>
#include <vector>

namespace nessdrag::quadrature {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

// Adaptive Gauss-Kronrod (7/15) integration of f over (lower, upper),
// either endpoint may be +-infinity. Interior breakpoints split the domain
// into independently refined panels; semi-infinite panels are mapped to
// (0,1) via x = c +- tail_scale * u/(1-u). Results are deterministic for a
// fixed spec.
template <typename T>
struct BasicIntegralSpec {
    std::function<T(double)> integrand;
    double lower = 0.0;
    double upper = 1.0;
    std::vector<double> breakpoints{}; // sorted, strictly inside (lower, upper)
    double rel_tol = 1e-9;
    double abs_tol = 1e-280;
    int max_depth = 50;
    double tail_scale = 1.0; // decay length used by the infinite-domain map
};

template <typename T>
struct BasicIntegralResult {
    T value{};
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

using IntegralSpec = BasicIntegralSpec<double>;
using IntegralResult = BasicIntegralResult<double>;
using ComplexIntegralSpec = BasicIntegralSpec<std::complex<double>>;
using ComplexIntegralResult = BasicIntegralResult<std::complex<double>>;

IntegralResult integrate(const IntegralSpec& spec);
ComplexIntegralResult integrate(const ComplexIntegralSpec& spec);

// Composite Simpson on a uniform grid per panel; finite domains only.
// Verification path for tests, independent of the adaptive engine.
double integrate_oracle(const IntegralSpec& spec, int n_points);

} // namespace nessdrag::quadrature
