#include "qgas/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qgas/errors.hpp"

namespace qgas {

namespace {

constexpr std::size_t kTailTerms = 4096;
constexpr double kSeriesOrder = 1.5;

// n-th derivative of f(x) = exp(-a x) x^{-3/2} at x.
double decay_derivative(int n, double a, double x) {
    double total = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= n; ++j) {
        // d^j x^{-s} = (-1)^j s (s+1) ... (s+j-1) x^{-s-j}
        double rising = 1.0;
        for (int i = 0; i < j; ++i) rising *= kSeriesOrder + i;
        const double power_part = ((j % 2) ? -rising : rising) * std::pow(x, -kSeriesOrder - j);
        const double exp_part = std::pow(-a, n - j);
        total += binom * exp_part * power_part;
        binom = binom * (n - j) / (j + 1);
    }
    return total * std::exp(-a * x);
}

// Crude envelope for |f^{(n)}(x)|, used to bound the dropped tail correction.
double derivative_envelope(int n, double a, double x) {
    return std::pow(a + (kSeriesOrder + n - 1) / x, n) * std::exp(-a * x) *
           std::pow(x, -kSeriesOrder);
}

// int_N^inf exp(-a x) x^{-3/2} dx = 2 e^{-aN}/sqrt(N) - 2 sqrt(pi a) erfc(sqrt(aN)).
double decay_integral(double a, double n) {
    const double first = 2.0 * std::exp(-a * n) / std::sqrt(n);
    if (a == 0.0) return first;
    return first - 2.0 * std::sqrt(std::numbers::pi * a) * std::erfc(std::sqrt(a * n));
}

void check_unit_interval(double z, const char* who) {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError(std::string(who) + ": fugacity must lie in [0, 1], got " +
                          std::to_string(z));
    }
}

// Sums sign^{k+1} z^k / k^{3/2} until the remainder is bounded by tolerance:
// the next term for the alternating series, t z / (1 - z) otherwise (term
// ratios are below z).
double cutoff_series(double z, bool alternating, const SeriesParams& params, const char* who) {
    const double tail_factor = alternating ? 1.0 : z / (1.0 - z);
    double sum = 0.0;
    double power = z;
    double term = 0.0;
    for (std::size_t k = 1; k <= params.max_terms; ++k) {
        const double kd = static_cast<double>(k);
        term = power / (kd * std::sqrt(kd));
        sum += (alternating && k % 2 == 0) ? -term : term;
        if (term * tail_factor < params.tolerance) return sum;
        power *= z;
    }
    throw TruncationError(std::string(who) + ": max_terms reached with last term " +
                              std::to_string(term) + " not yet below tolerance; partial sum " +
                              std::to_string(sum),
                          sum, term, params.max_terms);
}

double near_unit_series(double z, bool alternating, const SeriesParams& params,
                        const char* who) {
    const std::size_t n_terms = std::min(params.max_terms, kTailTerms);
    double sum = 0.0;
    double power = z;
    double term = 0.0;
    for (std::size_t k = 1; k <= n_terms; ++k) {
        const double kd = static_cast<double>(k);
        term = power / (kd * std::sqrt(kd));
        sum += (alternating && k % 2 == 0) ? -term : term;
        power *= z;
    }
    const double a = -std::log(z);
    const double n = static_cast<double>(n_terms);
    double tail = 0.0;
    double remainder_bound = 0.0;
    if (!alternating) {
        // sum_{k>N} f(k) = int_N^inf f - f(N)/2 - f'(N)/12 + f'''(N)/720 - ...
        tail = decay_integral(a, n) - 0.5 * decay_derivative(0, a, n) -
               decay_derivative(1, a, n) / 12.0 + decay_derivative(3, a, n) / 720.0;
        remainder_bound = derivative_envelope(5, a, n) / 30240.0;
    } else {
        // sum_{j>=0} (-1)^j g(j) = g(0)/2 - g'(0)/4 + g'''(0)/48 - ..., g(j) = f(N+1+j)
        const double m = n + 1.0;
        const double boole = 0.5 * decay_derivative(0, a, m) - 0.25 * decay_derivative(1, a, m) +
                             decay_derivative(3, a, m) / 48.0;
        tail = (n_terms % 2 == 0) ? boole : -boole;
        remainder_bound = derivative_envelope(5, a, m) / 480.0;
    }
    if (remainder_bound >= params.tolerance) {
        throw TruncationError(std::string(who) + ": tail estimate after " +
                                  std::to_string(n_terms) + " terms not accurate to tolerance",
                              sum, term, n_terms);
    }
    return sum + tail;
}

} // namespace

void SeriesParams::validate() const {
    if (!(tolerance > 0.0)) throw PreconditionError("SeriesParams: tolerance must be > 0");
    if (max_terms < 1) throw PreconditionError("SeriesParams: max_terms must be >= 1");
}

Fugacity::Fugacity(double value) : value_(value) {
    check_unit_interval(value, "Fugacity");
}

double bose_g32(Fugacity z, const SeriesParams& params) {
    params.validate();
    const double x = z.value();
    if (x == 0.0) return 0.0;
    if (x > kNearUnitFugacity) return near_unit_series(x, false, params, "bose_g32");
    return cutoff_series(x, false, params, "bose_g32");
}

double fermi_f32_full(Fugacity z, const SeriesParams& params) {
    params.validate();
    const double x = z.value();
    if (x == 0.0) return 0.0;
    if (x > kNearUnitFugacity) return near_unit_series(x, true, params, "fermi_f32_full");
    return cutoff_series(x, true, params, "fermi_f32_full");
}

double fermi_f32_truncated(Fugacity z) {
    const double x = z.value();
    return x - x * x / (2.0 * std::numbers::sqrt2) + x * x * x / (3.0 * std::numbers::sqrt3);
}

double bose_g32_quadrature(Fugacity z) {
    const double x = z.value();
    if (x == 0.0) return 0.0;
    const double log_z = std::log(x);
    // x = t^2: g = (2/sqrt(pi)) int_0^inf 2 t^2 / (e^{t^2 - ln z} - 1) dt
    auto integrand = [log_z](double t) {
        if (t == 0.0) return log_z == 0.0 ? 2.0 : 0.0;
        return 2.0 * t * t / std::expm1(t * t - log_z);
    };
    // Beyond t = 8 the integrand is below 1e-26.
    constexpr double upper = 8.0;
    double error = 0.0;
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, 0.0, upper, 20, 1e-14, &error);
    if (!(error <= 1e-9)) {
        throw ConvergenceError("bose_g32_quadrature: error estimate " + std::to_string(error) +
                               " above 1e-9");
    }
    return 2.0 / std::sqrt(std::numbers::pi) * integral;
}

} // namespace qgas
