#include "heisengram/gramian.hpp"

#include "heisengram/bspline.hpp"
#include "heisengram/quadrature.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace heisengram {

Window Window::centered(int nk, int nl) {
    if (nk < 1 || nl < 1) throw std::invalid_argument("Window::centered: sizes must be >= 1");
    Window w;
    w.k_lo = -((nk - 1) / 2);
    w.k_hi = w.k_lo + nk - 1;
    w.l_lo = -((nl - 1) / 2);
    w.l_hi = w.l_lo + nl - 1;
    return w;
}

std::vector<std::pair<int, int>> Window::indices() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size());
    for (int k = k_lo; k <= k_hi; ++k)
        for (int l = l_lo; l <= l_hi; ++l) out.emplace_back(k, l);
    return out;
}

namespace {

struct RSumPlan {
    int r_lo = 0;
    int r_hi = 0;
    double tail = 0.0;
};

// Certified truncation of Σ_r |ĥ(-(λ-r))|²·(spatial factors)(λ-r).
RSumPlan r_sum_plan(const SeparableGenerator& g, double lambda, double eps) {
    RSumPlan plan;
    const TProfile& tp = g.t_part;
    if (tp.kind == TProfile::Kind::FrequencyIndicator) {
        plan.r_lo = static_cast<int>(std::ceil(lambda));
        plan.r_hi = static_cast<int>(std::floor(lambda + tp.p));
        plan.tail = 0.0;
        return plan;
    }
    const double xy_bound = to_double(g.u.norm_sq()) * to_double(g.v.norm_sq());
    const double per_term_eps = eps / std::max(xy_bound, 1e-300);
    constexpr int kRadiusCap = 20000;
    int radius;
    double spectral_tail;
    if (tp.spline_order > 0) {
        radius = sinc_tail_radius(tp.spline_order, per_term_eps, kRadiusCap);
        spectral_tail = sinc_tail_bound(tp.spline_order, radius);
    } else {
        // |ĥ(ξ)| <= TV(h)/(2π|ξ|) gives Σ_{|r|>R} |ĥ|² <= 2(TV/2π)²/(R-1).
        const double tv = tp.h.total_variation_bound();
        const double c = 2.0 * (tv / (2.0 * std::numbers::pi)) * (tv / (2.0 * std::numbers::pi));
        const double r = 1.0 + c / std::max(per_term_eps, 1e-300);
        radius = r >= kRadiusCap ? kRadiusCap : std::max(2, static_cast<int>(std::ceil(r)));
        spectral_tail = c / (radius - 1.0);
    }
    plan.r_lo = -radius;
    plan.r_hi = radius;
    plan.tail = xy_bound * spectral_tail;
    return plan;
}

std::complex<double> entry_phase(std::pair<int, int> row, std::pair<int, int> col, double lambda) {
    const double expo = 2.0 * std::numbers::pi * lambda
                        * static_cast<double>(static_cast<long>(row.second) * col.first
                                              - static_cast<long>(row.first) * col.second);
    return std::exp(std::complex<double>(0.0, expo));
}

std::complex<double> entry_from_factors(const SeparableGenerator& g, const SpatialFactors& factors,
                                        std::pair<int, int> row, std::pair<int, int> col, double lambda,
                                        double eps, double* achieved_tail) {
    if (factors.zero) return {0.0, 0.0};
    if (row == col || (factors.a == 0.0 && factors.b == 0.0)) {
        // Diagonal offsets reduce to ||u||²||v||²·Φ_h, which is exact.
        const double diag = to_double(g.u.norm_sq()) * to_double(g.v.norm_sq())
                            * periodized_spectrum(g.t_part, lambda, eps);
        return {diag, 0.0};
    }
    const RSumPlan plan = r_sum_plan(g, lambda, eps);
    if (achieved_tail) *achieved_tail = std::max(*achieved_tail, plan.tail);
    std::complex<double> sum = 0.0;
    for (int r = plan.r_lo; r <= plan.r_hi; ++r) {
        const double weight = spectrum_sq(g.t_part, r - lambda);
        if (weight == 0.0) continue;
        sum += weight * factors.eval(lambda - r);
    }
    return entry_phase(row, col, lambda) * sum;
}

using FactorCache = std::map<std::pair<int, int>, SpatialFactors>;

const SpatialFactors& cached_factors(FactorCache& cache, const SeparableGenerator& g, int dk, int dl) {
    auto it = cache.find({dk, dl});
    if (it == cache.end())
        it = cache.emplace(std::make_pair(dk, dl), spatial_factors(g, 2.0 * dk, static_cast<double>(dl))).first;
    return it->second;
}

}  // namespace

std::complex<double> gramian_entry(const SeparableGenerator& g, std::pair<int, int> row,
                                   std::pair<int, int> col, double lambda, double eps) {
    const SpatialFactors factors = spatial_factors(g, 2.0 * (row.first - col.first), row.second - col.second);
    return entry_from_factors(g, factors, row, col, lambda, eps, nullptr);
}

GramianMatrix assemble_gramian(const SeparableGenerator& g, const Window& window, double lambda, double eps) {
    GramianMatrix G;
    G.lambda = lambda;
    G.eps = eps;
    G.indices = window.indices();
    const int n = static_cast<int>(G.indices.size());
    if (n == 0) throw std::invalid_argument("assemble_gramian: empty window");
    G.entries.resize(n, n);
    FactorCache cache;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto& row = G.indices[i];
            const auto& col = G.indices[j];
            const auto& factors = cached_factors(cache, g, row.first - col.first, row.second - col.second);
            G.entries(i, j) = entry_from_factors(g, factors, row, col, lambda, eps, &G.tail_bound);
        }
    }
    const Eigen::MatrixXcd adj = G.entries.adjoint();
    G.asymmetry = (G.entries - adj).cwiseAbs().maxCoeff();
    if (G.asymmetry > 1e-8)
        throw std::runtime_error("assemble_gramian: Hermitian asymmetry " + std::to_string(G.asymmetry)
                                 + " exceeds 1e-8; phase convention violated");
    G.entries = 0.5 * (G.entries + adj);
    return G;
}

GramianMatrix assemble_gramian_bruteforce(const SeparableGenerator& g, const Window& window, double lambda,
                                          double eps, int quad_order) {
    GramianMatrix G;
    G.lambda = lambda;
    G.eps = eps;
    G.indices = window.indices();
    const int n = static_cast<int>(G.indices.size());
    G.entries.resize(n, n);

    const auto usup = g.u.support();
    const auto vsup = g.v.support();
    if (!usup || !vsup) throw std::invalid_argument("assemble_gramian_bruteforce: zero spatial factor");
    const std::function<std::complex<double>(double, double)> slice = [&](double x, double y) {
        return std::complex<double>(g.u(x) * g.v(y), 0.0);
    };

    const RSumPlan plan = r_sum_plan(g, lambda, eps);
    G.tail_bound = plan.tail;
    for (int i = 0; i < n; ++i) {
        const auto [ki, li] = G.indices[i];
        for (int j = 0; j < n; ++j) {
            const auto [kj, lj] = G.indices[j];
            // Support boxes of the two translates.
            const double x_lo = std::max(to_double(usup->first) + 2.0 * ki, to_double(usup->first) + 2.0 * kj);
            const double x_hi = std::min(to_double(usup->second) + 2.0 * ki, to_double(usup->second) + 2.0 * kj);
            const double y_lo = std::max(to_double(vsup->first) + li, to_double(vsup->first) + lj);
            const double y_hi = std::min(to_double(vsup->second) + li, to_double(vsup->second) + lj);
            if (!(x_lo < x_hi) || !(y_lo < y_hi)) {
                G.entries(i, j) = 0.0;
                continue;
            }
            std::vector<double> xcuts, ycuts;
            for (const auto& b : g.u.breakpoints()) {
                xcuts.push_back(to_double(b) + 2.0 * ki);
                xcuts.push_back(to_double(b) + 2.0 * kj);
            }
            for (const auto& b : g.v.breakpoints()) {
                ycuts.push_back(to_double(b) + li);
                ycuts.push_back(to_double(b) + lj);
            }
            const auto xb = panel_breaks(x_lo, x_hi, xcuts);
            const auto yb = panel_breaks(y_lo, y_hi, ycuts);

            std::complex<double> acc = 0.0;
            for (int r = plan.r_lo; r <= plan.r_hi; ++r) {
                const double mu = lambda - r;
                const double weight = spectrum_sq(g.t_part, -mu);
                if (weight == 0.0) continue;
                acc += weight
                       * tensor_integrate(
                             [&](double x, double y) {
                                 const auto a = twisted_translate_eval(2.0 * ki, li, mu, slice, x, y);
                                 const auto b = twisted_translate_eval(2.0 * kj, lj, mu, slice, x, y);
                                 return a * std::conj(b);
                             },
                             xb, yb, quad_order);
            }
            G.entries(i, j) = acc;
        }
    }
    const Eigen::MatrixXcd adj = G.entries.adjoint();
    G.asymmetry = (G.entries - adj).cwiseAbs().maxCoeff();
    G.entries = 0.5 * (G.entries + adj);
    return G;
}

namespace {

EigBounds lanczos_extremes(const Eigen::MatrixXcd& A) {
    const int n = static_cast<int>(A.rows());
    const int m = std::min(n, 120);
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd q(n);
    for (int i = 0; i < n; ++i) q(i) = std::complex<double>(gauss(rng), gauss(rng));
    q.normalize();

    std::vector<Eigen::VectorXcd> basis{q};
    Eigen::VectorXd alpha(m), beta(m);
    Eigen::VectorXcd prev = Eigen::VectorXcd::Zero(n);
    double beta_prev = 0.0;
    int steps = 0;
    for (int j = 0; j < m; ++j) {
        Eigen::VectorXcd w = A * basis[j] - beta_prev * prev;
        alpha(j) = w.dot(basis[j]).real();
        w -= alpha(j) * basis[j];
        for (const auto& b : basis) w -= b.dot(w) * b;  // full reorthogonalization
        const double nb = w.norm();
        steps = j + 1;
        if (nb < 1e-14) break;
        beta(j) = nb;
        prev = basis[j];
        beta_prev = nb;
        basis.push_back(w / nb);
    }
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(steps, steps);
    for (int j = 0; j < steps; ++j) {
        T(j, j) = alpha(j);
        if (j + 1 < steps) T(j, j + 1) = T(j + 1, j) = beta(j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    EigBounds out;
    out.min_eig = es.eigenvalues().minCoeff();
    out.max_eig = es.eigenvalues().maxCoeff();
    const double last_beta = steps < m ? 0.0 : beta(steps - 1);
    const auto& vecs = es.eigenvectors();
    out.residual = std::abs(last_beta) * std::max(std::abs(vecs(steps - 1, 0)), std::abs(vecs(steps - 1, steps - 1)));
    return out;
}

}  // namespace

EigBounds eig_bounds(const GramianMatrix& G) {
    EigBounds out;
    const int n = static_cast<int>(G.entries.rows());
    if (n <= 4096) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G.entries, Eigen::EigenvaluesOnly);
        out.min_eig = es.eigenvalues().minCoeff();
        out.max_eig = es.eigenvalues().maxCoeff();
        out.residual = 0.0;
        return out;
    }
    return lanczos_extremes(G.entries);
}

RieszScanReport riesz_scan(const SeparableGenerator& g, const std::vector<Window>& windows, int grid_size,
                           double eps) {
    if (windows.empty()) throw std::invalid_argument("riesz_scan: need at least one window");
    for (size_t i = 1; i < windows.size(); ++i)
        if (windows[i].size() < windows[i - 1].size())
            throw std::invalid_argument("riesz_scan: windows must be non-decreasing");
    RieszScanReport report;
    report.lambda_grid = midpoint_grid(grid_size);
    for (const auto& w : windows) {
        std::vector<double> mins, maxs;
        mins.reserve(report.lambda_grid.size());
        maxs.reserve(report.lambda_grid.size());
        for (const double lam : report.lambda_grid) {
            const auto bounds = eig_bounds(assemble_gramian(g, w, lam, eps));
            mins.push_back(bounds.min_eig);
            maxs.push_back(bounds.max_eig);
        }
        report.window_labels.push_back(std::to_string(w.k_hi - w.k_lo + 1) + "x"
                                       + std::to_string(w.l_hi - w.l_lo + 1));
        report.window_dims.push_back(w.size());
        report.window_A_est.push_back(*std::min_element(mins.begin(), mins.end()));
        report.window_B_est.push_back(*std::max_element(maxs.begin(), maxs.end()));
        report.min_eigs.push_back(std::move(mins));
        report.max_eigs.push_back(std::move(maxs));
    }
    report.A_est = *std::min_element(report.window_A_est.begin(), report.window_A_est.end());
    report.B_est = *std::max_element(report.window_B_est.begin(), report.window_B_est.end());
    report.riesz_consistent = true;
    for (const double a : report.window_A_est) report.riesz_consistent = report.riesz_consistent && a > 0.0;
    return report;
}

FrameCheckReport frame_check(const SeparableGenerator& g, const Window& window,
                             const std::vector<double>& lambda_grid, int trials, unsigned long long seed) {
    if (trials < 1) throw std::invalid_argument("frame_check: trials must be >= 1");
    FrameCheckReport report;
    report.lambda_grid = lambda_grid;
    report.global_inf = std::numeric_limits<double>::infinity();
    report.global_sup = 0.0;

    // Enlarged window capturing every (k,l) that interacts with the base one.
    const int rk = static_cast<int>(std::ceil(to_double(g.u.support_width()) / 2.0));
    const int rl = static_cast<int>(std::ceil(to_double(g.v.support_width())));
    Window ext = window;
    ext.k_lo -= rk;
    ext.k_hi += rk;
    ext.l_lo -= rl;
    ext.l_hi += rl;

    const auto base = window.indices();
    const auto extended = ext.indices();
    const int nb = static_cast<int>(base.size());
    const int ne = static_cast<int>(extended.size());

    for (size_t li = 0; li < lambda_grid.size(); ++li) {
        const double lam = lambda_grid[li];
        // P(r, c) = <f_c, f_r>; rows over the enlarged window.
        Eigen::MatrixXcd P(ne, nb);
        FactorCache cache;
        for (int r = 0; r < ne; ++r) {
            for (int c = 0; c < nb; ++c) {
                const auto& row = base[c];
                const auto& col = extended[r];
                const auto& factors = cached_factors(cache, g, row.first - col.first, row.second - col.second);
                P(r, c) = entry_from_factors(g, factors, row, col, lam, 1e-10, nullptr);
            }
        }
        // Rows of P matching the base window give the square Gramian form.
        std::vector<int> base_rows;
        for (int r = 0; r < ne; ++r)
            if (extended[r].first >= window.k_lo && extended[r].first <= window.k_hi
                && extended[r].second >= window.l_lo && extended[r].second <= window.l_hi)
                base_rows.push_back(r);

        std::mt19937_64 rng(seed + 0x51ed2701u * (li + 1));
        std::normal_distribution<double> gauss;
        double inf_ratio = std::numeric_limits<double>::infinity();
        double sup_ratio = 0.0;
        for (int t = 0; t < trials; ++t) {
            Eigen::VectorXcd alpha(nb);
            for (int c = 0; c < nb; ++c) alpha(c) = std::complex<double>(gauss(rng), gauss(rng));
            const Eigen::VectorXcd analysis = P * alpha;
            std::complex<double> qf = 0.0;
            for (size_t rr = 0; rr < base_rows.size(); ++rr)
                qf += std::conj(alpha(static_cast<int>(rr))) * analysis(base_rows[rr]);
            const double denom = qf.real();
            if (denom < 1e-14) {
                ++report.skipped;
                continue;
            }
            const double ratio = analysis.squaredNorm() / denom;
            inf_ratio = std::min(inf_ratio, ratio);
            sup_ratio = std::max(sup_ratio, ratio);
        }
        report.inf_ratio.push_back(inf_ratio);
        report.sup_ratio.push_back(sup_ratio);
        report.global_inf = std::min(report.global_inf, inf_ratio);
        report.global_sup = std::max(report.global_sup, sup_ratio);
    }
    return report;
}

}  // namespace heisengram
