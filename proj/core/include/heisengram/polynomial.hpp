#pragma once

#include "heisengram/rational.hpp"

#include <vector>

namespace heisengram {

/// Dense univariate polynomial with rational coefficients, stored in
/// ascending powers. The zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    static Polynomial constant(const Rational& c);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rational operator()(const Rational& t) const;
    double operator()(double t) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& s) const;

    /// q with q(t) = p(t + c).
    Polynomial with_argument_shifted(const Rational& c) const;

    Polynomial derivative() const;
    /// Antiderivative with zero constant term.
    Polynomial antiderivative() const;

    bool operator==(const Polynomial& other) const = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Integer binomial(int n, int k);

}  // namespace heisengram
