#include "heisengram/heisenberg.hpp"

#include "heisengram/bspline.hpp"

#include <numbers>
#include <stdexcept>

namespace heisengram {

GroupElement group_product(const GroupElement& a, const GroupElement& b) {
    return {a.x + b.x, a.y + b.y, a.t + b.t + 0.5 * (b.x * a.y - b.y * a.x)};
}

GroupElement group_inverse(const GroupElement& a) { return {-a.x, -a.y, -a.t}; }

GroupElement group_op(const GroupElement& a, const GroupElement& b, bool invert_a) {
    return group_product(invert_a ? group_inverse(a) : a, b);
}

double left_translate_eval(const SeparableGenerator& g, const GroupElement& w, const GroupElement& p) {
    if (g.t_part.kind != TProfile::Kind::TimeDomain)
        throw std::invalid_argument("left_translate_eval: frequency-indicator profiles have no pointwise values");
    const GroupElement q = group_op(w, p, /*invert_a=*/true);
    return g.u(q.x) * g.v(q.y) * g.t_part.h(q.t);
}

std::complex<double> twisted_translate_eval(double a, double b, double lambda,
                                            const std::function<std::complex<double>(double, double)>& F,
                                            double x, double y) {
    const double phase = std::numbers::pi * lambda * (b * x - a * y);
    return std::exp(std::complex<double>(0.0, phase)) * F(x - a, y - b);
}

std::complex<double> twisted_composition_phase(double a, double b, double c, double d, double lambda) {
    return std::exp(std::complex<double>(0.0, std::numbers::pi * lambda * (c * b - a * d)));
}

SpatialFactors spatial_factors(const SeparableGenerator& g, double a, double b) {
    SpatialFactors f;
    f.a = a;
    f.b = b;
    f.ux = g.u.shifted(rational_from_double(a)) * g.u;
    f.vy = g.v.shifted(rational_from_double(b)) * g.v;
    f.zero = f.ux.is_zero() || f.vy.is_zero();
    return f;
}

std::complex<double> SpatialFactors::eval(double lambda) const {
    if (zero) return {0.0, 0.0};
    const double pl = std::numbers::pi * lambda;
    return modulated_integral(ux, pl * b) * modulated_integral(vy, -pl * a);
}

std::complex<double> twisted_inner(const SeparableGenerator& g, double a, double b, double lambda) {
    const SpatialFactors f = spatial_factors(g, a, b);
    if (f.zero) return {0.0, 0.0};
    return spectrum_sq(g.t_part, -lambda) * f.eval(lambda);
}

}  // namespace heisengram
