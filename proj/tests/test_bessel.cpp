#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "nessdrag/bessel.hpp"
#include "nessdrag/quadrature.hpp"

using namespace nessdrag;

namespace {

struct Ref {
    double x;
    double value;
};

// High-precision references for the two branches (series <= 2 < continued
// fraction) and both tails.
const Ref k0_ref[] = {
    {1e-6, 13.931442073626419},    {1e-4, 9.3262719134502749},
    {0.01, 4.7212447301610950},    {0.1, 2.4270690247020166},
    {0.5, 0.92441907122766586},    {1.0, 0.42102443824070833},
    {1.9, 0.12884597927604748},    {2.0, 0.11389387274953344},
    {2.1, 0.10078374088996695},    {3.0, 0.034739504386279248},
    {5.0, 0.0036910983340425943},  {8.0, 0.00014647070522281539},
    {12.0, 2.2008253973114914e-6}, {20.0, 5.7412378153365243e-10},
    {40.0, 8.3928611000995670e-19},{60.0, 1.4138978405591078e-27},
    {90.0, 1.0810242556984255e-40},{120.0, 8.7635680998255777e-54},
};

const Ref k2_ref[] = {
    {1e-6, 1999999999999.5000},    {1e-4, 199999999.50000001},
    {0.01, 19999.500068389411},    {0.1, 199.50396464211414},
    {0.5, 7.5501835512408694},     {1.0, 1.6248388986351775},
    {1.9, 0.29690929825780286},    {2.0, 0.25375975456605586},
    {2.1, 0.21768508520759353},    {3.0, 0.061510458471742038},
    {5.0, 0.0053089437122234600},  {8.0, 0.00018531300817406567},
    {12.0, 2.5826183081060227e-6}, {20.0, 6.3295436122922281e-10},
    {40.0, 8.8177176978426190e-19},{60.0, 1.4614189081096780e-27},
    {90.0, 1.1051801100484218e-40},{120.0, 8.9102348918271237e-54},
};

// Independent oracle: K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
double bessel_k_by_quadrature(int nu, double x)
{
    quadrature::IntegralSpec spec;
    spec.lower = 0.0;
    spec.upper = 60.0; // cosh(60) ~ 5.7e25, integrand long dead
    spec.rel_tol = 1e-13;
    spec.integrand = [nu, x](double t) {
        const double e = -x * std::cosh(t);
        if (e < -700.0) return 0.0;
        return std::exp(e) * std::cosh(nu * t);
    };
    return quadrature::integrate(spec).value;
}

} // namespace

TEST_CASE("bessel_k matches frozen references to 1e-13")
{
    for (const auto& r : k0_ref)
        CHECK(bessel_k0(r.x) == doctest::Approx(r.value).epsilon(1e-13));
    for (const auto& r : k2_ref)
        CHECK(bessel_k2(r.x) == doctest::Approx(r.value).epsilon(1e-13));
}

TEST_CASE("bessel_k matches the integral representation")
{
    for (double x : {0.3, 1.0, 1.7, 2.0, 2.5, 4.0, 9.0, 25.0}) {
        CHECK(bessel_k0(x) == doctest::Approx(bessel_k_by_quadrature(0, x)).epsilon(1e-12));
        CHECK(bessel_k2(x) == doctest::Approx(bessel_k_by_quadrature(2, x)).epsilon(1e-12));
    }
}

TEST_CASE("bessel_k recurrence k2 = k0 + 2 k1 / x")
{
    for (double x : {0.05, 0.9, 2.0, 3.3, 15.0}) {
        const double lhs = bessel_k2(x);
        const double rhs = bessel_k0(x) + 2.0 * bessel_k1(x) / x;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
    }
}

TEST_CASE("bessel_k rejects non-positive arguments")
{
    CHECK_THROWS_AS(bessel_k0(0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k2(-1.0), std::domain_error);
}
