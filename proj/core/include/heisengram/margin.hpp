#pragma once

#include <vector>

namespace heisengram {

/// Result of minimizing the Riesz-margin p - A_p(λ) over (0,1).
struct MarginResult {
    int p = 0;
    double lambda0 = 0.0;   // location of the global interior minimum
    double margin = 0.0;    // p - A_p(lambda0), strictly positive for p >= 3
    double curvature = 0.0; // second derivative at lambda0
    std::vector<double> critical_points;  // every sign change of the derivative found
    bool unique_minimum = false;
};

/// A_p(λ) = 2 sinc(1-λ)[1 + (1-λ)(ψ(p-λ+1) - ψ(2-λ))]; A_p(1) = 2 exactly.
double a_p_closed(int p, double lambda);

/// 2·|Σ_{r=1}^p e^{iπ(λ-r)} sinc(λ-r)| by direct complex summation; the
/// independent route the closed form is checked against.
double a_p_direct(int p, double lambda);

/// p - A_p(λ).
double margin_value(int p, double lambda);

/// d/dλ of the margin: explicit rational-trigonometric form for p = 3,
/// five-point central difference of the closed form otherwise.
double margin_derivative(int p, double lambda);

/// Minimizes p - A_p on (0,1): 2048-point sign scan of the derivative, then
/// bisection to |derivative| <= 1e-12 on each bracket; the global minimum is
/// reported with a finite-difference curvature. Throws std::runtime_error if
/// no sign change is found. p >= 3 required.
MarginResult margin_min(int p);

/// (p+1 - A_{p+1}(λ)) - (p - A_p(λ)) = 1 - 2(1-λ)/(p+1-λ)·sinc(1-λ).
double margin_monotonicity_gap(int p, double lambda);

}  // namespace heisengram
