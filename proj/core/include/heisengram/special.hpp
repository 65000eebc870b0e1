#pragma once

namespace heisengram {

/// sin(πx)/(πx) with sinc(0) = 1; Taylor branch below |x| = 1e-4.
double sinc(double x);

/// Digamma ψ⁽⁰⁾(x) for x > 0, absolute error below 1e-12.
/// Upward recurrence into x >= 10, then the asymptotic Bernoulli series.
/// Throws std::domain_error for x <= 0.
double digamma(double x);

}  // namespace heisengram
