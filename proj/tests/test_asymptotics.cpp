#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "nessdrag/asymptotics.hpp"
#include "nessdrag/constants.hpp"
#include "nessdrag/params.hpp"

using namespace nessdrag;
using namespace nessdrag::asymptotics;
using nessdrag::constants::pi;

namespace {

SystemParams fig_params()
{
    SystemParams p;
    p.xi_a = 0.2;
    p.Z = 0.1;
    p.eta = 0.1;
    p.alpha_sp = 5.97e-5;
    const double s = 1.0 / std::sqrt(3.0);
    p.dipole = {s, s, s};
    return p;
}

ResponseContext fig_context(double V)
{
    return make_context(fig_params(), SurfaceModel::drude(0.1), V);
}

// Minimal exact rational for the prefactor identities.
struct Rational {
    std::int64_t num, den;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { reduce(); }
    void reduce()
    {
        std::int64_t a = num < 0 ? -num : num, b = den;
        while (b) {
            const auto t = a % b;
            a = b;
            b = t;
        }
        if (a) {
            num /= a;
            den /= a;
        }
    }
    Rational operator+(const Rational& o) const
    {
        return {num * o.den + o.num * den, den * o.den};
    }
    Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

} // namespace

TEST_CASE("exact rational prefactor identities")
{
    // 45/16 + 9/4 = 81/16
    CHECK(Rational(45, 16) + Rational(9, 4) == Rational(81, 16));
    // 90 (21/20) + 72 (87/80) = 864/5
    CHECK(Rational(90, 1) * Rational(21, 20) + Rational(72, 1) * Rational(87, 80)
          == Rational(864, 5));
    // averaged deficit (72 * 87/80) / (90 * 21/20) = 29/35
    CHECK(Rational(72, 1) * Rational(87, 80) == Rational(783, 10));
    CHECK(Rational(90, 1) * Rational(21, 20) == Rational(189, 2));
}

TEST_CASE("low-velocity laws at the reference configuration")
{
    const double V = 1e-5;
    const auto ctx = fig_context(V);

    // A = 1 orientation: 45/16 C and 9/4 C with
    // C = [alpha_sp/(24 pi Z^3)][eta^2/(24 pi)] V^3/Z^7.
    CHECK(lte_low_v(ctx, V) == doctest::Approx(2.95355208176e-15).epsilon(1e-9));
    CHECK(j_low_v(ctx, V) == doctest::Approx(2.36284166541e-15).epsilon(1e-9));
    CHECK(total_low_v(ctx, V) == doctest::Approx(5.31639374717e-15).epsilon(1e-9));

    // Shift correction is a fraction of a percent here.
    LowVOptions with_shift;
    with_shift.include_shift = true;
    const double ratio = lte_low_v(ctx, V, with_shift) / lte_low_v(ctx, V);
    CHECK(ratio == doctest::Approx(1.00158547449).epsilon(1e-9));
    CHECK(std::abs(ratio - 1.0) < 0.002);
}

TEST_CASE("scaling and decomposition properties of the low-velocity laws")
{
    const auto ctx = fig_context(1e-5);
    CHECK(total_low_v(ctx, 2e-5) == doctest::Approx(8.0 * total_low_v(ctx, 1e-5)).epsilon(1e-13));

    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int i = 0; i < 10; ++i) {
        auto p = fig_params();
        p.Z *= u(rng);
        p.eta *= u(rng);
        p.alpha_sp *= u(rng);
        const auto c = make_context(p, SurfaceModel::drude(p.eta), 1e-5);
        const double V = 1e-5 * u(rng);
        CHECK(total_low_v(c, V)
              == doctest::Approx(lte_low_v(c, V) + j_low_v(c, V)).epsilon(1e-14));
        LowVOptions avg;
        avg.averaged = true;
        CHECK(gamma_form(c, V) == doctest::Approx(total_low_v(c, V, avg)).epsilon(1e-12));
    }
}

TEST_CASE("ratio of the J and LTE laws")
{
    const auto ctx = fig_context(1e-5);
    CHECK(j_low_v(ctx, 1e-5) / lte_low_v(ctx, 1e-5) == doctest::Approx(0.8).epsilon(1e-12));
    LowVOptions avg;
    avg.averaged = true;
    CHECK(j_low_v(ctx, 1e-5, avg) / lte_low_v(ctx, 1e-5, avg)
          == doctest::Approx(72.0 * 87.0 / 80.0 / (90.0 * 21.0 / 20.0)).epsilon(1e-12));
}

TEST_CASE("SI and dimensionless forms agree after unit conversion")
{
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int i = 0; i < 10; ++i) {
        SIInputs in;
        in.alpha0 = 5.26e-39 * u(rng);
        in.omega_p = ev_to_rad_s(9.0) * u(rng);
        const double omega_sp = in.omega_p / std::sqrt(2.0);
        in.Gamma = 0.1 * omega_sp * u(rng);
        in.z_a = 0.1 * constants::c_light / omega_sp * u(rng);
        in.omega_a = 0.2 * omega_sp;
        in.v = constants::c_light * 1e-5 * u(rng);
        const auto b = from_si(in);

        auto params = b.params;
        params.dipole = fig_params().dipole;
        const auto ctx = make_context(params, SurfaceModel::drude(params.eta), b.V);

        LowVOptions avg;
        avg.averaged = true;
        const double f_lte_si = si::lte_low_v(in.alpha0, b.norm.rho, in.v, in.z_a);
        const double f_j_si = si::j_low_v(in.alpha0, b.norm.rho, in.v, in.z_a);
        const double f_tot_si = si::total_low_v(in.alpha0, b.norm.rho, in.v, in.z_a);
        CHECK(f_lte_si < 0.0);
        CHECK(f_lte_si / b.norm.F0_SI
              == doctest::Approx(lte_low_v(ctx, b.V, avg)).epsilon(1e-10));
        CHECK(f_j_si / b.norm.F0_SI == doctest::Approx(j_low_v(ctx, b.V, avg)).epsilon(1e-10));
        CHECK(f_tot_si / b.norm.F0_SI
              == doctest::Approx(total_low_v(ctx, b.V, avg)).epsilon(1e-10));

        // Eq-by-eq identity of the gamma-squared form, in SI and normalized.
        const double f_gamma_si =
            si::gamma_form(in.alpha0, in.omega_a, b.norm.rho, in.v, in.z_a);
        CHECK(f_gamma_si == doctest::Approx(f_tot_si).epsilon(1e-12));
        CHECK(f_gamma_si / b.norm.F0_SI == doctest::Approx(gamma_form(ctx, b.V)).epsilon(1e-10));
    }
}

TEST_CASE("induced damping scales as 1/z^3")
{
    const double g1 = si::induced_damping(5.26e-39, 1e15, 5.8e-7, 1e-8);
    const double g2 = si::induced_damping(5.26e-39, 1e15, 5.8e-7, std::cbrt(2.0) * 1e-8);
    CHECK(g1 > 0.0);
    CHECK(g2 == doctest::Approx(0.5 * g1).epsilon(1e-12));
}

TEST_CASE("high-velocity law: suppression, underflow flag, post-kink monotonicity")
{
    const auto ctx = fig_context(1e-5);
    CHECK(high_v(ctx, 4e-3) == doctest::Approx(7.15937745507e-4).epsilon(1e-10));

    // Deep exponential suppression below the kink.
    CHECK(high_v(ctx, 1e-4) < 1e-170);

    bool underflow = false;
    CHECK(high_v(ctx, 5e-5, &underflow) == 0.0);
    CHECK(underflow);

    const double vstar = crossover_velocity(ctx);
    double prev = high_v(ctx, vstar);
    for (int i = 1; i <= 10; ++i) {
        const double v = vstar * std::pow(10.0, i / 10.0);
        const double cur = high_v(ctx, v);
        CHECK(cur > prev);
        prev = cur;
    }
}

TEST_CASE("crossover velocity location and parameter dependence")
{
    const auto ctx = fig_context(1e-5);
    const double vstar = crossover_velocity(ctx);
    CHECK(vstar > 1e-3 / 3.0);
    CHECK(vstar < 3e-3);

    auto stiffer = fig_params();
    stiffer.xi_a = 0.4;
    const auto ctx2 = make_context(stiffer, SurfaceModel::drude(0.1), 1e-5);
    CHECK(crossover_velocity(ctx2) > vstar);

    // No crossing when the resonant channel is frozen out everywhere.
    auto dead = fig_params();
    dead.xi_a = 50.0;
    const auto ctx3 = make_context(dead, SurfaceModel::drude(0.1), 1e-5);
    CHECK_THROWS_AS(crossover_velocity(ctx3), std::domain_error);
}

TEST_CASE("low_v laws reject non-positive velocities")
{
    const auto ctx = fig_context(1e-5);
    CHECK_THROWS_AS(lte_low_v(ctx, 0.0), std::domain_error);
    CHECK_THROWS_AS(high_v(ctx, -1.0), std::domain_error);
}
