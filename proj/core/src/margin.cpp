#include "heisengram/margin.hpp"

#include "heisengram/special.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace heisengram {

double a_p_closed(int p, double lambda) {
    if (p < 1) throw std::invalid_argument("a_p_closed: p must be >= 1");
    const double one_m = 1.0 - lambda;
    if (one_m == 0.0) return 2.0;
    return 2.0 * sinc(one_m) * (1.0 + one_m * (digamma(p - lambda + 1.0) - digamma(2.0 - lambda)));
}

double a_p_direct(int p, double lambda) {
    std::complex<double> sum = 0.0;
    for (int r = 1; r <= p; ++r) {
        const double arg = std::numbers::pi * (lambda - r);
        sum += std::complex<double>(std::cos(arg), std::sin(arg)) * sinc(lambda - r);
    }
    return 2.0 * std::abs(sum);
}

double margin_value(int p, double lambda) { return p - a_p_closed(p, lambda); }

namespace {

// Explicit derivative of 3 - A_3(λ) as a rational-trigonometric expression.
double margin_derivative_p3(double lambda) {
    const double l = lambda;
    const double pi = std::numbers::pi;
    const double num = 2.0 * pi * (l - 3.0) * (l - 2.0) * (l - 1.0) * (3.0 * (l - 4.0) * l + 11.0) * std::cos(pi * l)
                       - 2.0 * (3.0 * (l - 4.0) * l * ((l - 4.0) * l + 8.0) + 49.0) * std::sin(pi * l);
    const double den = pi * (l - 3.0) * (l - 3.0) * (l - 2.0) * (l - 2.0) * (l - 1.0) * (l - 1.0);
    return num / den;
}

}  // namespace

double margin_derivative(int p, double lambda) {
    if (p == 3) return margin_derivative_p3(lambda);
    const double h = 1e-4;
    // Five-point stencil.
    return (margin_value(p, lambda - 2 * h) - 8.0 * margin_value(p, lambda - h)
            + 8.0 * margin_value(p, lambda + h) - margin_value(p, lambda + 2 * h))
           / (12.0 * h);
}

MarginResult margin_min(int p) {
    if (p < 3) throw std::invalid_argument("margin_min: p must be >= 3");
    constexpr int kScanPoints = 2048;
    constexpr double kLo = 1e-6, kHi = 1.0 - 1e-6;

    MarginResult result;
    result.p = p;

    double prev_x = kLo;
    double prev_f = margin_derivative(p, prev_x);
    for (int i = 1; i <= kScanPoints; ++i) {
        const double x = kLo + (kHi - kLo) * i / kScanPoints;
        const double f = margin_derivative(p, x);
        if ((prev_f < 0.0 && f >= 0.0) || (prev_f > 0.0 && f <= 0.0)) {
            double a = prev_x, b = x, fa = prev_f;
            for (int iter = 0; iter < 200; ++iter) {
                const double mid = 0.5 * (a + b);
                const double fm = margin_derivative(p, mid);
                if (std::abs(fm) <= 1e-12 || (b - a) < 1e-14) {
                    a = b = mid;
                    break;
                }
                if ((fa < 0.0) == (fm < 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            result.critical_points.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_f = f;
    }
    if (result.critical_points.empty())
        throw std::runtime_error("margin_min: no interior critical point found; contradicts the endpoint values");

    result.unique_minimum = result.critical_points.size() == 1;
    result.lambda0 = result.critical_points.front();
    result.margin = margin_value(p, result.lambda0);
    for (const double x : result.critical_points) {
        const double v = margin_value(p, x);
        if (v < result.margin) {
            result.margin = v;
            result.lambda0 = x;
        }
    }
    // Five-point second derivative at the minimum.
    const double h = 1e-3;
    const double x0 = result.lambda0;
    result.curvature = (-margin_value(p, x0 - 2 * h) + 16.0 * margin_value(p, x0 - h) - 30.0 * margin_value(p, x0)
                        + 16.0 * margin_value(p, x0 + h) - margin_value(p, x0 + 2 * h))
                       / (12.0 * h * h);
    return result;
}

double margin_monotonicity_gap(int p, double lambda) {
    if (p < 3) throw std::invalid_argument("margin_monotonicity_gap: p must be >= 3");
    return 1.0 - 2.0 * (1.0 - lambda) / (p + 1.0 - lambda) * sinc(1.0 - lambda);
}

}  // namespace heisengram
