#include <doctest.h>

#include <stdexcept>

#include <array>
#include <cmath>
#include <random>

#include "nessdrag/constants.hpp"
#include "nessdrag/orientation.hpp"
#include "nessdrag/quadrature.hpp"

using namespace nessdrag;
using nessdrag::constants::pi;

namespace {

const double inv_sqrt3 = 1.0 / std::sqrt(3.0);

std::array<double, 3> random_direction(std::mt19937& rng)
{
    std::normal_distribution<double> gauss;
    std::array<double, 3> d{gauss(rng), gauss(rng), gauss(rng)};
    const double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    for (auto& c : d) c /= n;
    return d;
}

} // namespace

TEST_CASE("angular_factors at reference directions")
{
    const auto diag = angular_factors({inv_sqrt3, inv_sqrt3, inv_sqrt3});
    CHECK(diag.A0 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(diag.A2 == doctest::Approx(1.0).epsilon(1e-14));

    const auto x = angular_factors({1.0, 0.0, 0.0});
    CHECK(x.A0 == doctest::Approx(3.0));
    CHECK(x.A2 == doctest::Approx(0.0));

    const auto z = angular_factors({0.0, 0.0, 1.0});
    CHECK(z.A0 == doctest::Approx(1.5));
    CHECK(z.A2 == doctest::Approx(1.5));
}

TEST_CASE("angular_factors bounds and parity over random directions")
{
    std::mt19937 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const auto d = random_direction(rng);
        const auto f = angular_factors(d);
        CHECK(f.A0 >= -1.5 - 1e-12);
        CHECK(f.A0 <= 3.0 + 1e-12);
        CHECK(f.A2 >= -1e-12);
        CHECK(f.A2 <= 1.5 + 1e-12);
        const auto g = angular_factors({-d[0], -d[1], -d[2]});
        CHECK(f.A0 == doctest::Approx(g.A0).epsilon(1e-14));
        CHECK(f.A2 == doctest::Approx(g.A2).epsilon(1e-14));
        const auto der = derived_factors(f);
        CHECK(der.a_zero >= 0.0);
        CHECK(der.a_lte >= 0.0);
        CHECK(der.a_j >= 0.0);
    }
    CHECK_THROWS_AS(angular_factors({1.0, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("derived factors equal one for the diagonal direction")
{
    const auto d = derived_factors(angular_factors({inv_sqrt3, inv_sqrt3, inv_sqrt3}));
    CHECK(d.a_zero == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.a_lte == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.a_j == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("kernel_K value, evenness, positivity, decay")
{
    const AngularFactors unit{1.0, 1.0};
    // K0(1) + K2(1)
    CHECK(kernel_K(0.5, unit) == doctest::Approx(2.0458633368758859).epsilon(1e-12));
    CHECK(kernel_K(5.0, unit) < 1e-3 * kernel_K(0.5, unit));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.01, 50.0);
    for (int i = 0; i < 100; ++i) {
        const double w = u(rng);
        CHECK(kernel_K(-w, unit) == kernel_K(w, unit));
        CHECK(kernel_K(w, unit) > 0.0);
    }

    // Positivity also holds where A0 < 0 (dipole along y).
    const auto fy = angular_factors({0.0, 1.0, 0.0});
    CHECK(fy.A0 == doctest::Approx(-1.5));
    for (int i = 0; i < 100; ++i)
        CHECK(kernel_K(u(rng), fy) > 0.0);

    CHECK_THROWS_AS(kernel_K(0.0, unit), std::domain_error);
}

TEST_CASE("kernel_K_w2 is the stable w^2 K product")
{
    const AngularFactors f{0.7, 1.2};
    CHECK(kernel_K_w2(0.0, f) == doctest::Approx(0.5 * f.A2));
    CHECK(kernel_K_w2(1e-300, f) == doctest::Approx(0.5 * f.A2));
    for (double w : {1e-5, 1e-3, 0.3, 2.0, 10.0})
        CHECK(kernel_K_w2(w, f) == doctest::Approx(w * w * kernel_K(w, f)).epsilon(1e-9));
}

TEST_CASE("bessel_moment closed form against the quadrature engine")
{
    CHECK(bessel_moment(2, 0) == doctest::Approx(pi / 16.0).epsilon(1e-14));
    CHECK(bessel_moment(2, 2) == doctest::Approx(3.0 * pi / 16.0).epsilon(1e-14));

    for (int nu : {0, 2}) {
        for (int n = nu; n <= 6; ++n) {
            quadrature::IntegralSpec spec;
            spec.lower = 0.0;
            spec.upper = quadrature::infinity;
            spec.rel_tol = 1e-11;
            spec.tail_scale = 2.0;
            const AngularFactors pick{nu == 0 ? 1.0 : 0.0, nu == 2 ? 1.0 : 0.0};
            spec.integrand = [n, &pick](double w) {
                if (w == 0.0) return 0.0;
                return std::pow(w, n) * kernel_K(w, pick);
            };
            if (n == nu && nu == 2) spec.breakpoints = {1e-3}; // w^2 K2 ~ 1/2 near 0
            const auto got = quadrature::integrate(spec);
            CHECK(got.value == doctest::Approx(bessel_moment(n, nu)).epsilon(1e-9));
        }
    }

    CHECK_THROWS_AS(bessel_moment(1, 2), std::domain_error);
    CHECK_THROWS_AS(bessel_moment(-1, 0), std::domain_error);
}

TEST_CASE("static kernel moment reproduces the response normalization")
{
    // (1/2pi) int dw w^2 K(w) / (6 pi) = A^0/(24 pi) for any factors.
    const AngularFactors f{2.2, 0.4};
    const double moments = 2.0 * (f.A0 * bessel_moment(2, 0) + f.A2 * bessel_moment(2, 2));
    const double lhs = moments / (2.0 * pi) / (6.0 * pi);
    const double a_zero = derived_factors(f).a_zero;
    CHECK(lhs == doctest::Approx(a_zero / (24.0 * pi)).epsilon(1e-13));
}

TEST_CASE("sphere averages hit the exact fractions")
{
    const double lte = sphere_average(
        [](const AngularFactors& f) { return derived_factors(f).a_lte; }, 32);
    const double j = sphere_average(
        [](const AngularFactors& f) { return derived_factors(f).a_j; }, 32);
    const double a0 = sphere_average([](const AngularFactors& f) { return f.A0; }, 32);
    const double a2 = sphere_average([](const AngularFactors& f) { return f.A2; }, 32);

    CHECK(lte == doctest::Approx(21.0 / 20.0).epsilon(1e-12));
    CHECK(j == doctest::Approx(87.0 / 80.0).epsilon(1e-12));
    CHECK(a0 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a2 == doctest::Approx(1.0).epsilon(1e-12));
}
