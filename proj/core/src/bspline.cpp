#include "heisengram/bspline.hpp"

#include "heisengram/special.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace heisengram {

TProfile TProfile::time_domain(PiecewisePolynomial h) {
    if (h.is_zero()) throw std::invalid_argument("TProfile: time-domain profile must be nonzero");
    TProfile t;
    t.kind = Kind::TimeDomain;
    t.h = std::move(h);
    t.spline_order = detect_bspline_order(t.h);
    return t;
}

TProfile TProfile::frequency_indicator(int p) {
    if (p < 1) throw std::invalid_argument("TProfile: indicator width p must be >= 1");
    TProfile t;
    t.kind = Kind::FrequencyIndicator;
    t.p = p;
    return t;
}

PiecewisePolynomial bspline(int n) {
    if (n < 1) throw std::invalid_argument("bspline: order must be >= 1");
    PiecewisePolynomial b = PiecewisePolynomial::indicator(0, 1);
    const PiecewisePolynomial b1 = b;
    for (int k = 2; k <= n; ++k) b = convolve(b, b1);
    return b;
}

int detect_bspline_order(const PiecewisePolynomial& h, int max_order) {
    if (h.is_zero()) return 0;
    for (int n = 1; n <= max_order; ++n) {
        if (h.breakpoints().size() == static_cast<size_t>(n) + 1 && h == bspline(n)) return n;
    }
    return 0;
}

double spectrum_sq(const TProfile& profile, double xi) {
    if (profile.kind == TProfile::Kind::FrequencyIndicator)
        return (xi >= 0.0 && xi <= profile.p) ? 1.0 : 0.0;
    if (profile.spline_order > 0) {
        const double s = sinc(xi);
        double acc = 1.0;
        for (int i = 0; i < 2 * profile.spline_order; ++i) acc *= s;
        return acc;
    }
    const std::complex<double> hat = modulated_integral(profile.h, -2.0 * std::numbers::pi * xi);
    return std::norm(hat);
}

std::vector<Rational> autocorrelation_lags(const PiecewisePolynomial& h) {
    std::vector<Rational> lags;
    const Rational width = h.support_width();
    const auto sup = h.support();
    for (int j = 0; Rational(j) < width; ++j)
        lags.push_back(integrate_product_shifted(h, h, Rational(j), sup->first, sup->second));
    return lags;
}

double periodized_spectrum(const TProfile& profile, double lambda, double /*eps*/) {
    if (profile.kind == TProfile::Kind::FrequencyIndicator) {
        // #{k : lambda + k in [0, p]}
        const int k_lo = static_cast<int>(std::ceil(-lambda));
        const int k_hi = static_cast<int>(std::floor(profile.p - lambda));
        return static_cast<double>(k_hi - k_lo + 1);
    }
    // Exact symbol: Φ(λ) = ρ_0 + 2 Σ_{j>=1} ρ_j cos(2πjλ); finitely many lags
    // because h has compact support.
    const auto lags = autocorrelation_lags(profile.h);
    double acc = to_double(lags[0]);
    for (size_t j = 1; j < lags.size(); ++j)
        acc += 2.0 * to_double(lags[j]) * std::cos(2.0 * std::numbers::pi * static_cast<double>(j) * lambda);
    return acc;
}

double periodized_spectrum_truncated(const TProfile& profile, double lambda, int radius) {
    double acc = 0.0;
    for (int k = -radius; k <= radius; ++k) acc += spectrum_sq(profile, lambda + k);
    return acc;
}

double sinc_tail_bound(int n, int radius) {
    if (radius < 2) return std::numeric_limits<double>::infinity();
    const double pi2n = std::pow(std::numbers::pi, 2 * n);
    return 2.0 / ((2.0 * n - 1.0) * pi2n * std::pow(static_cast<double>(radius - 1), 2.0 * n - 1.0));
}

int sinc_tail_radius(int n, double eps, int cap) {
    const double pi2n = std::pow(std::numbers::pi, 2 * n);
    const double base = 2.0 / ((2.0 * n - 1.0) * pi2n * eps);
    const double r = 1.0 + std::pow(base, 1.0 / (2.0 * n - 1.0));
    if (r >= static_cast<double>(cap)) return cap;
    return std::max(2, static_cast<int>(std::ceil(r)));
}

std::vector<double> midpoint_grid(int n) {
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = (i + 0.5) / n;
    return grid;
}

ClassicalRieszReport riesz_bounds_classical(const TProfile& profile, int grid_size, double eps) {
    if (grid_size < 2) throw std::invalid_argument("riesz_bounds_classical: grid_size must be >= 2");
    ClassicalRieszReport report;
    report.lambda_grid = midpoint_grid(grid_size);
    report.phi_values.reserve(grid_size);
    for (const double lam : report.lambda_grid) report.phi_values.push_back(periodized_spectrum(profile, lam, eps));
    report.A_est = *std::min_element(report.phi_values.begin(), report.phi_values.end());
    report.tail_bound = 0.0;  // both routes are exact finite sums
    report.B_est = *std::max_element(report.phi_values.begin(), report.phi_values.end()) + report.tail_bound;
    if (profile.kind == TProfile::Kind::FrequencyIndicator) {
        report.truncation_radius = profile.p;
    } else {
        report.truncation_radius = static_cast<int>(autocorrelation_lags(profile.h).size()) - 1;
    }
    return report;
}

}  // namespace heisengram
