#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace heisengram {

/// Gauss-Legendre nodes and weights on [-1, 1]; cached per order.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int order);

/// Composite Gauss-Legendre over the panels defined by consecutive break
/// values (must be sorted; zero-length panels are skipped).
double integrate_panels(const std::function<double(double)>& f, const std::vector<double>& breaks, int order);
std::complex<double> integrate_panels_complex(const std::function<std::complex<double>(double)>& f,
                                              const std::vector<double>& breaks, int order);

/// Tensor-product quadrature of F over the grid of x- and y-panels.
std::complex<double> tensor_integrate(const std::function<std::complex<double>(double, double)>& F,
                                      const std::vector<double>& xbreaks, const std::vector<double>& ybreaks,
                                      int order);

/// Sorted, deduplicated panel splits: the interval ends plus every value of
/// `cuts` that falls strictly inside [lo, hi].
std::vector<double> panel_breaks(double lo, double hi, const std::vector<double>& cuts);

}  // namespace heisengram
