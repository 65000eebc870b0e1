#pragma once

#include "heisengram/piecewise_polynomial.hpp"

namespace heisengram {

/// The t-factor of a separable generator: either an explicit compactly
/// supported time-domain signal h, or the frequency-side indicator
/// ĥ = χ_[0,p] of Example-3.3 type (which has no pointwise time values).
///
/// Fourier convention throughout: ĥ(ξ) = ∫ h(t) e^{-2πiξt} dt, so the
/// λ-slice of a separable generator contributes the factor ĥ(-λ).
struct TProfile {
    enum class Kind { TimeDomain, FrequencyIndicator };

    Kind kind = Kind::TimeDomain;
    PiecewisePolynomial h;  // TimeDomain only
    int p = 0;              // FrequencyIndicator only
    int spline_order = 0;   // >0 when h is the cardinal B-spline of that order

    static TProfile time_domain(PiecewisePolynomial h);
    static TProfile frequency_indicator(int p);

    bool operator==(const TProfile& other) const = default;
};

}  // namespace heisengram
