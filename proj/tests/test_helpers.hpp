#pragma once

#include "heisengram/piecewise_polynomial.hpp"

#include <complex>
#include <functional>
#include <random>

namespace heisengram::testing {

// Adaptive Simpson quadrature, the all-purpose numeric oracle.
template <typename T>
T adaptive_simpson_impl(const std::function<T(double)>& f, double a, double b, T fa, T fm, T fb, T whole,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const T flm = f(lm), frm = f(rm);
    const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const T delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_impl(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
           + adaptive_simpson_impl(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

inline std::complex<double> adaptive_simpson(const std::function<std::complex<double>(double)>& f, double a,
                                             double b, double tol = 1e-14, int depth = 40) {
    const std::complex<double> fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const std::complex<double> whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_impl<std::complex<double>>(f, a, b, fa, fm, fb, whole, tol, depth);
}

inline double adaptive_simpson_real(const std::function<double(double)>& f, double a, double b,
                                    double tol = 1e-14, int depth = 40) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_impl<double>(f, a, b, fa, fm, fb, whole, tol, depth);
}

inline Rational random_rational(std::mt19937& rng, int num_range = 9, int den_range = 9) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

// Random compactly supported piecewise polynomial with small rational data.
inline PiecewisePolynomial random_piecewise(std::mt19937& rng, int max_pieces = 3, int max_degree = 2) {
    std::uniform_int_distribution<int> npieces(1, max_pieces);
    std::uniform_int_distribution<int> deg(0, max_degree);
    const int n = npieces(rng);
    std::vector<Rational> bp;
    std::uniform_int_distribution<int> step_num(1, 6);
    std::uniform_int_distribution<int> start(-4, 4);
    Rational x(start(rng));
    bp.push_back(x);
    for (int i = 0; i < n; ++i) {
        x += Rational(step_num(rng), 3);
        bp.push_back(x);
    }
    std::vector<Polynomial> pieces;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> coeffs(deg(rng) + 1);
        for (auto& c : coeffs) c = random_rational(rng, 4, 4);
        pieces.emplace_back(std::move(coeffs));
    }
    return PiecewisePolynomial(std::move(bp), std::move(pieces));
}

}  // namespace heisengram::testing
