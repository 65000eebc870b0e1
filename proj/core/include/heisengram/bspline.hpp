#pragma once

#include "heisengram/profile.hpp"

#include <vector>

namespace heisengram {

/// Cardinal B-spline of order n on [0, n], built by iterated convolution of
/// the unit indicator. Throws std::invalid_argument for n < 1.
PiecewisePolynomial bspline(int n);

/// Returns n if h equals the cardinal B-spline of order n (n <= max_order),
/// otherwise 0.
int detect_bspline_order(const PiecewisePolynomial& h, int max_order = 12);

/// |ĥ(ξ)|² under ĥ(ξ) = ∫ h(t) e^{-2πiξt} dt.
/// FrequencyIndicator(p): χ_[0,p](ξ). B-spline of order n: sinc^{2n}(ξ).
/// Other time-domain profiles: |modulated_integral(h, -2πξ)|².
double spectrum_sq(const TProfile& profile, double xi);

/// Φ_h(λ) = Σ_{k∈Z} |ĥ(λ+k)|², certified within eps.
/// FrequencyIndicator: exact finite count. Time-domain: the exact finite
/// autocorrelation symbol Σ_j <h, T_j h> e^{2πijλ} (zero tail).
double periodized_spectrum(const TProfile& profile, double lambda, double eps);

/// Plain truncated sum Σ_{|k|<=radius} |ĥ(λ+k)|², no tail correction. The
/// independent route used to cross-check the exact symbol.
double periodized_spectrum_truncated(const TProfile& profile, double lambda, int radius);

/// Autocorrelation lags ρ_j = ∫ h(t+j) h(t) dt for j = 0..J (exact; J is the
/// last lag with overlapping support).
std::vector<Rational> autocorrelation_lags(const PiecewisePolynomial& h);

/// Certified bound on Σ_{|k|>R} sinc^{2n}(λ+k) for λ in (0,1]:
/// 2/((2n-1)·π^{2n}·(R-1)^{2n-1}).
double sinc_tail_bound(int n, int radius);

/// Smallest radius whose sinc^{2n} tail bound is below eps, capped.
int sinc_tail_radius(int n, double eps, int cap = 2000000);

struct ClassicalRieszReport {
    std::vector<double> lambda_grid;  // midpoints of the uniform partition of (0,1]
    std::vector<double> phi_values;   // Φ_h per grid point
    double A_est = 0.0;               // min over grid (estimate of essinf)
    double B_est = 0.0;               // max over grid plus tail_bound
    int truncation_radius = 0;        // extent of the finite expansion summed
    double tail_bound = 0.0;          // certified remainder (0 for exact routes)
};

/// Theorem-2.3-style scan of the integer-translate Riesz criterion over a
/// uniform midpoint grid of (0,1]. Grid estimates only: no essinf/esssup
/// certification between grid points.
ClassicalRieszReport riesz_bounds_classical(const TProfile& profile, int grid_size, double eps);

/// Midpoints (i + 1/2)/n, i = 0..n-1; avoids both endpoints of (0,1].
std::vector<double> midpoint_grid(int n);

}  // namespace heisengram
