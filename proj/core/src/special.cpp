#include "heisengram/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace heisengram {

double sinc(double x) {
    const double px = std::numbers::pi * x;
    if (std::abs(x) < 1e-4) {
        const double p2 = px * px;
        return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
    }
    return std::sin(px) / px;
}

double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: argument must be positive");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // ln x - 1/(2x) - Σ B_{2k}/(2k x^{2k}); truncated where the next term is
    // below 1e-16 for x >= 10.
    const double inv2 = 1.0 / (x * x);
    double series = 0.0;
    static const double coeff[] = {
        1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    double p = inv2;
    for (const double c : coeff) {
        series += c * p;
        p *= inv2;
    }
    return acc + std::log(x) - 0.5 / x - series;
}

}  // namespace heisengram
