#include "nessdrag/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nessdrag/constants.hpp"

namespace nessdrag {

namespace {

constexpr double euler_gamma = 0.577215664901532860606512090082;
constexpr double series_eps = std::numeric_limits<double>::epsilon();

void require_positive(double x)
{
    if (!(x > 0.0))
        throw std::domain_error("bessel_k: argument must be > 0");
}

// I0 and I1 by their ascending series; only needed for x <= 2 where a
// handful of terms reaches machine precision.
double besseli0_small(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * series_eps) break;
    }
    return sum;
}

double besseli1_small(double x)
{
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1.0));
        sum += term;
        if (term < sum * series_eps) break;
    }
    return 0.5 * x * sum;
}

// Ascending series for K0 and K1 on (0, 2].
void bessel_k01_series(double x, double& k0, double& k1)
{
    const double q = 0.25 * x * x;
    const double lg = std::log(0.5 * x);

    // K0 = -(log(x/2) + gamma) I0 + sum_{k>=1} H_k q^k / (k!)^2
    {
        double term = 1.0, sum = 0.0, h = 0.0;
        for (int k = 1; k < 40; ++k) {
            term *= q / (static_cast<double>(k) * k);
            h += 1.0 / k;
            const double add = term * h;
            sum += add;
            if (add < (std::abs(sum) + 1.0) * series_eps) break;
        }
        k0 = -(lg + euler_gamma) * besseli0_small(x) + sum;
    }

    // K1 = log(x/2) I1 + 1/x - (x/4) sum_k [psi(k+1)+psi(k+2)] q^k / (k!(k+1)!)
    {
        double term = 1.0, sum = 0.0;
        double psi_a = -euler_gamma;       // psi(1)
        double psi_b = 1.0 - euler_gamma;  // psi(2)
        for (int k = 0; k < 40; ++k) {
            if (k > 0) {
                term *= q / (static_cast<double>(k) * (k + 1.0));
                psi_a += 1.0 / k;
                psi_b += 1.0 / (k + 1.0);
            }
            const double add = term * (psi_a + psi_b);
            sum += add;
            if (std::abs(add) < (std::abs(sum) + 1.0) * series_eps) break;
        }
        k1 = lg * besseli1_small(x) + 1.0 / x - 0.25 * x * sum;
    }
}

// Steed's continued fraction (CF2) for K0 and K1, x >= 2.
void bessel_k01_cf(double x, double& k0, double& k1)
{
    constexpr int max_iter = 200;
    const double a1 = 0.25; // 0.25 - mu^2 with mu = 0

    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;

    for (int i = 2; i <= max_iter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < series_eps) break;
    }
    h = a1 * h;

    k0 = std::sqrt(constants::pi / (2.0 * x)) * std::exp(-x) / s;
    k1 = k0 * (x + 0.5 - h) / x;
}

void bessel_k01(double x, double& k0, double& k1)
{
    if (x <= 2.0)
        bessel_k01_series(x, k0, k1);
    else
        bessel_k01_cf(x, k0, k1);
}

} // namespace

double bessel_k0(double x)
{
    require_positive(x);
    double k0, k1;
    bessel_k01(x, k0, k1);
    return k0;
}

double bessel_k1(double x)
{
    require_positive(x);
    double k0, k1;
    bessel_k01(x, k0, k1);
    return k1;
}

double bessel_k2(double x)
{
    require_positive(x);
    double k0, k1;
    bessel_k01(x, k0, k1);
    return k0 + 2.0 * k1 / x; // upward recurrence, all terms positive
}

} // namespace nessdrag
