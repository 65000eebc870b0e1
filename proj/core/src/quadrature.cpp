#include "heisengram/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace heisengram {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton iteration from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        gl.nodes[n - 1 - i] = x;
        gl.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::map<int, GaussLegendre> cache;
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

double integrate_panels(const std::function<double(double)>& f, const std::vector<double>& breaks, int order) {
    const auto& gl = gauss_legendre(order);
    double acc = 0.0;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i], b = breaks[i + 1];
        if (!(b > a)) continue;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (size_t j = 0; j < gl.nodes.size(); ++j) acc += half * gl.weights[j] * f(mid + half * gl.nodes[j]);
    }
    return acc;
}

std::complex<double> integrate_panels_complex(const std::function<std::complex<double>(double)>& f,
                                              const std::vector<double>& breaks, int order) {
    const auto& gl = gauss_legendre(order);
    std::complex<double> acc = 0.0;
    for (size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i], b = breaks[i + 1];
        if (!(b > a)) continue;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (size_t j = 0; j < gl.nodes.size(); ++j) acc += half * gl.weights[j] * f(mid + half * gl.nodes[j]);
    }
    return acc;
}

std::complex<double> tensor_integrate(const std::function<std::complex<double>(double, double)>& F,
                                      const std::vector<double>& xbreaks, const std::vector<double>& ybreaks,
                                      int order) {
    return integrate_panels_complex(
        [&](double x) {
            return integrate_panels_complex([&](double y) { return F(x, y); }, ybreaks, order);
        },
        xbreaks, order);
}

std::vector<double> panel_breaks(double lo, double hi, const std::vector<double>& cuts) {
    std::vector<double> out{lo, hi};
    for (const double c : cuts)
        if (c > lo && c < hi) out.push_back(c);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace heisengram
