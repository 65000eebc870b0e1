#pragma once

#include "heisengram/polynomial.hpp"

#include <complex>
#include <optional>
#include <utility>
#include <vector>

namespace heisengram {

/// Compactly supported piecewise polynomial with rational breakpoints,
/// identically zero outside [first, last] breakpoint. Coefficients are in the
/// global variable. Canonical form: adjacent intervals carrying the same
/// polynomial are merged and zero pieces at either end are trimmed, so
/// operator== is a semantic equality test.
///
/// Evaluation at a breakpoint uses the right piece, except at the final
/// breakpoint where the left piece applies (so indicator([a,b]) is 1 on the
/// closed interval).
class PiecewisePolynomial {
public:
    PiecewisePolynomial() = default;  // the zero function
    PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces);

    static PiecewisePolynomial zero() { return {}; }
    static PiecewisePolynomial indicator(const Rational& a, const Rational& b);

    bool is_zero() const { return pieces_.empty(); }
    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Polynomial>& pieces() const { return pieces_; }
    std::optional<std::pair<Rational, Rational>> support() const;
    Rational support_width() const;
    int degree() const;

    Rational operator()(const Rational& t) const;
    double operator()(double t) const;

    /// t -> f(t - s)
    PiecewisePolynomial shifted(const Rational& s) const;
    /// f restricted to [a, b], zero elsewhere.
    PiecewisePolynomial restricted(const Rational& a, const Rational& b) const;
    PiecewisePolynomial scaled(const Rational& s) const;
    PiecewisePolynomial derivative() const;

    PiecewisePolynomial operator+(const PiecewisePolynomial& other) const;
    PiecewisePolynomial operator-(const PiecewisePolynomial& other) const;
    /// Pointwise product.
    PiecewisePolynomial operator*(const PiecewisePolynomial& other) const;

    Rational integral() const;
    Rational integral(const Rational& a, const Rational& b) const;
    /// ∫ f² over the line.
    Rational norm_sq() const;
    /// Upper bound on the total variation: jump sizes plus √(width·∫f′²).
    double total_variation_bound() const;

    bool operator==(const PiecewisePolynomial& other) const = default;

private:
    void normalize();
    // Piece index for t in the half-open convention; -1 when outside support.
    int piece_index(const Rational& t) const;

    std::vector<Rational> breakpoints_;  // strictly increasing; size() == pieces_.size() + 1
    std::vector<Polynomial> pieces_;
};

/// Exact convolution (f * g)(t) = ∫ f(x) g(t - x) dx.
PiecewisePolynomial convolve(const PiecewisePolynomial& f, const PiecewisePolynomial& g);

/// Exact ∫_a^b p(t + shift) q(t) dt.
Rational integrate_product_shifted(const PiecewisePolynomial& p, const PiecewisePolynomial& q,
                                   const Rational& shift, const Rational& a, const Rational& b);

/// ∫ e^{iωt} p(t) dt. Closed form by repeated integration by parts per piece;
/// switches to a centered power series when |ω|·(support width) < 1/2 to
/// avoid the cancellation in the 1/ω powers.
std::complex<double> modulated_integral(const PiecewisePolynomial& p, double omega);

}  // namespace heisengram
