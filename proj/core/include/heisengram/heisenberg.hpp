#pragma once

#include "heisengram/profile.hpp"

#include <complex>
#include <functional>

namespace heisengram {

/// Point of the Heisenberg group: R³ with
/// (x,y,t)(x',y',t') = (x+x', y+y', t+t'+(x'y-y'x)/2).
struct GroupElement {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
};

GroupElement group_product(const GroupElement& a, const GroupElement& b);
GroupElement group_inverse(const GroupElement& a);
/// a·b, or a⁻¹·b when invert_a is set.
GroupElement group_op(const GroupElement& a, const GroupElement& b, bool invert_a);

/// Separable generator g(x,y,t) = u(x)·v(y)·h(t) with compactly supported
/// real piecewise-polynomial spatial factors and a time/frequency profile.
struct SeparableGenerator {
    PiecewisePolynomial u;
    PiecewisePolynomial v;
    TProfile t_part;

    bool operator==(const SeparableGenerator& other) const = default;
};

/// (L_w g)(p) = g(w⁻¹·p). Requires a time-domain profile (the frequency
/// indicator has no pointwise time values); throws std::invalid_argument
/// otherwise.
double left_translate_eval(const SeparableGenerator& g, const GroupElement& w, const GroupElement& p);

/// ((T_{(a,b)})ᵗ)^λ F (x,y) = e^{iπλ(bx-ay)} F(x-a, y-b).
std::complex<double> twisted_translate_eval(double a, double b, double lambda,
                                            const std::function<std::complex<double>(double, double)>& F,
                                            double x, double y);

/// Composition phase: (T_{(a,b)})ᵗ (T_{(c,d)})ᵗ = e^{iπλ(cb-ad)} (T_{(a+c,b+d)})ᵗ.
std::complex<double> twisted_composition_phase(double a, double b, double c, double d, double lambda);

/// <(T_{(a,b)})^λ g^λ, g^λ> for the λ-slice g^λ(x,y) = u(x)v(y)ĥ(-λ):
///   |ĥ(-λ)|² · ∫ e^{iπλbx} u(x-a)u(x) dx · ∫ e^{-iπλay} v(y-b)v(y) dy,
/// each factor an exact modulated integral of the product polynomial.
std::complex<double> twisted_inner(const SeparableGenerator& g, double a, double b, double lambda);

/// The two oscillatory factors of twisted_inner without the |ĥ(-λ)|² weight;
/// lets r-sums reuse the product polynomials across the spectral index.
struct SpatialFactors {
    PiecewisePolynomial ux;  // u(·-a)·u
    PiecewisePolynomial vy;  // v(·-b)·v
    double a = 0.0;
    double b = 0.0;
    bool zero = false;

    std::complex<double> eval(double lambda) const;
};
SpatialFactors spatial_factors(const SeparableGenerator& g, double a, double b);

}  // namespace heisengram
