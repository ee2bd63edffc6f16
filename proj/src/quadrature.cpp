#include "nessdrag/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace nessdrag::quadrature {

namespace {

// 15-point Kronrod extension of 7-point Gauss. Nodes are the positive half;
// even indices carry zero Gauss weight.
constexpr double kron_node[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kron_weight[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double gauss_weight[8] = {
    0.0, 0.129484966168870, 0.0, 0.279705391489277,
    0.0, 0.381830050505119, 0.0, 0.417959183673469};

template <typename T>
double magnitude(const T& v)
{
    return std::abs(v);
}

// One G7/K15 application on [a, b]. Error estimate follows the QUADPACK
// rescaling of |K15 - G7| by the roughness integral resasc.
template <typename T>
void gk15(const std::function<T(double)>& f, double a, double b, T& value,
          double& error, long& evaluations)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const T fc = f(center);
    T k15 = kron_weight[7] * fc;
    T g7 = gauss_weight[7] * fc;
    double resabs = kron_weight[7] * magnitude(fc);

    T samples_lo[7], samples_hi[7];
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kron_node[i];
        samples_lo[i] = f(center - dx);
        samples_hi[i] = f(center + dx);
        const T pair = samples_lo[i] + samples_hi[i];
        k15 += kron_weight[i] * pair;
        g7 += gauss_weight[i] * pair;
        resabs += kron_weight[i] * (magnitude(samples_lo[i]) + magnitude(samples_hi[i]));
    }
    evaluations += 15;

    const T mean = k15 * 0.5;
    double resasc = kron_weight[7] * magnitude(fc - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kron_weight[i] * (magnitude(samples_lo[i] - mean) + magnitude(samples_hi[i] - mean));
    resasc *= std::abs(half);
    resabs *= std::abs(half);

    value = k15 * half;
    double err = magnitude(k15 - g7) * std::abs(half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round_floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    error = std::max(err, round_floor);
}

// A segment is one breakpoint-delimited piece of the domain, reparametrized
// to finite local coordinates when an endpoint is infinite.
template <typename T>
struct Segment {
    std::function<T(double)> f; // local coordinates
    double a, b;                // local bounds
};

template <typename T>
struct Panel {
    int segment;
    double a, b; // local coordinates within the segment
    int depth;
    T value;
    double error;
};

template <typename T>
struct WorstFirst {
    bool operator()(const Panel<T>& lhs, const Panel<T>& rhs) const
    {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        if (lhs.segment != rhs.segment) return lhs.segment > rhs.segment;
        return lhs.a > rhs.a;
    }
};

template <typename T>
void validate_spec(const BasicIntegralSpec<T>& spec)
{
    if (!spec.integrand)
        throw std::invalid_argument("integrate: missing integrand");
    if (!(spec.lower < spec.upper))
        throw std::invalid_argument("integrate: requires lower < upper");
    if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0))
        throw std::invalid_argument("integrate: tolerances must be > 0");
    if (!(spec.tail_scale > 0.0))
        throw std::invalid_argument("integrate: tail_scale must be > 0");
    double prev = spec.lower;
    for (double p : spec.breakpoints) {
        if (!(p > prev) || !(p < spec.upper))
            throw std::invalid_argument("integrate: breakpoints must be sorted and strictly inside the domain");
        prev = p;
    }
}

template <typename T>
std::vector<Segment<T>> build_segments(const BasicIntegralSpec<T>& spec)
{
    std::vector<double> edges;
    edges.push_back(spec.lower);
    for (double p : spec.breakpoints) edges.push_back(p);
    edges.push_back(spec.upper);

    // A doubly infinite piece has no natural center; split it at zero.
    if (std::isinf(spec.lower) && std::isinf(spec.upper) && spec.breakpoints.empty())
        edges = {spec.lower, 0.0, spec.upper};

    const double w0 = spec.tail_scale;
    std::vector<Segment<T>> segs;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        const double a = edges[i], b = edges[i + 1];
        Segment<T> s;
        if (std::isinf(a) && std::isinf(b))
            throw std::invalid_argument("integrate: doubly infinite segment between breakpoints");
        if (!std::isinf(a) && !std::isinf(b)) {
            s.a = a;
            s.b = b;
            s.f = spec.integrand;
        } else if (std::isinf(b)) {
            // x = a + w0 u/(1-u), u in (0,1)
            auto f = spec.integrand;
            s.a = 0.0;
            s.b = 1.0;
            s.f = [f, a, w0](double u) {
                const double om = 1.0 - u;
                const double x = a + w0 * u / om;
                return f(x) * (w0 / (om * om));
            };
        } else {
            // x = b - w0 u/(1-u), u in (0,1)
            auto f = spec.integrand;
            s.a = 0.0;
            s.b = 1.0;
            s.f = [f, b, w0](double u) {
                const double om = 1.0 - u;
                const double x = b - w0 * u / om;
                return f(x) * (w0 / (om * om));
            };
        }
        segs.push_back(std::move(s));
    }
    return segs;
}

template <typename T>
BasicIntegralResult<T> integrate_impl(const BasicIntegralSpec<T>& spec)
{
    validate_spec(spec);
    const auto segments = build_segments(spec);

    BasicIntegralResult<T> result;
    std::priority_queue<Panel<T>, std::vector<Panel<T>>, WorstFirst<T>> queue;
    std::vector<Panel<T>> done; // panels at max depth

    T total{};
    double total_err = 0.0;
    for (size_t i = 0; i < segments.size(); ++i) {
        Panel<T> p;
        p.segment = static_cast<int>(i);
        p.a = segments[i].a;
        p.b = segments[i].b;
        p.depth = 0;
        gk15(segments[i].f, p.a, p.b, p.value, p.error, result.evaluations);
        total += p.value;
        total_err += p.error;
        queue.push(p);
    }

    const auto tolerance = [&](const T& v) {
        return std::max(spec.abs_tol, spec.rel_tol * magnitude(v));
    };

    constexpr long max_panels = 200000;
    long splits = 0;
    bool depth_exhausted = false;
    while (total_err > tolerance(total) && !queue.empty() && splits < max_panels) {
        Panel<T> worst = queue.top();
        queue.pop();
        if (worst.depth >= spec.max_depth) {
            // Nothing finer to try: the worst panel dominates the error.
            done.push_back(worst);
            depth_exhausted = true;
            break;
        }
        total -= worst.value;
        total_err -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        for (int side = 0; side < 2; ++side) {
            Panel<T> half;
            half.segment = worst.segment;
            half.a = side == 0 ? worst.a : mid;
            half.b = side == 0 ? mid : worst.b;
            half.depth = worst.depth + 1;
            gk15(segments[half.segment].f, half.a, half.b, half.value, half.error,
                 result.evaluations);
            total += half.value;
            total_err += half.error;
            queue.push(half);
        }
        ++splits;
    }

    // Canonical summation order: by segment, then left edge. Keeps the
    // result bit-identical however the refinement proceeded.
    while (!queue.empty()) {
        done.push_back(queue.top());
        queue.pop();
    }
    std::sort(done.begin(), done.end(), [](const Panel<T>& x, const Panel<T>& y) {
        if (x.segment != y.segment) return x.segment < y.segment;
        return x.a < y.a;
    });
    T value{};
    double error = 0.0;
    for (const auto& p : done) {
        value += p.value;
        error += p.error;
    }
    result.value = value;
    result.error_estimate = error;
    result.converged = !depth_exhausted && error <= tolerance(value);
    return result;
}

} // namespace

IntegralResult integrate(const IntegralSpec& spec)
{
    return integrate_impl(spec);
}

ComplexIntegralResult integrate(const ComplexIntegralSpec& spec)
{
    return integrate_impl(spec);
}

double integrate_oracle(const IntegralSpec& spec, int n_points)
{
    validate_spec(spec);
    if (std::isinf(spec.lower) || std::isinf(spec.upper))
        throw std::invalid_argument("integrate_oracle: finite domains only");
    if (n_points < 3)
        throw std::invalid_argument("integrate_oracle: need at least 3 points");

    std::vector<double> edges;
    edges.push_back(spec.lower);
    for (double p : spec.breakpoints) edges.push_back(p);
    edges.push_back(spec.upper);

    const int n = (n_points % 2 == 0) ? n_points + 1 : n_points;
    double sum = 0.0;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        const double a = edges[i], b = edges[i + 1];
        const double h = (b - a) / (n - 1);
        double panel = spec.integrand(a) + spec.integrand(b);
        for (int k = 1; k < n - 1; ++k)
            panel += spec.integrand(a + k * h) * (k % 2 == 1 ? 4.0 : 2.0);
        sum += panel * h / 3.0;
    }
    return sum;
}

} // namespace nessdrag::quadrature
