#pragma once

#include "heisengram/heisenberg.hpp"

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace heisengram {

/// Rectangular lattice window of (k,l) pairs, enumerated row-major with k
/// outermost.
struct Window {
    int k_lo = 0, k_hi = 0, l_lo = 0, l_hi = 0;

    /// nk x nl window with ranges [-(n-1)/2, n/2]; nested for n = 1,2,4,8,...
    static Window centered(int nk, int nl);
    std::vector<std::pair<int, int>> indices() const;
    int size() const { return (k_hi - k_lo + 1) * (l_hi - l_lo + 1); }
};

/// Truncated Gramian of {τ(L_(2k,l,0) g)(λ)} over a finite window.
/// entries(i,j) = <f_i, f_j>, Hermitian positive semidefinite.
struct GramianMatrix {
    double lambda = 0.0;
    std::vector<std::pair<int, int>> indices;
    Eigen::MatrixXcd entries;
    double eps = 0.0;         // requested r-sum truncation tolerance
    double tail_bound = 0.0;  // certified truncation remainder actually achieved (max over entries)
    double asymmetry = 0.0;   // max |entry - conj(transpose)| before Hermitianization
};

/// Single Gramian entry
///   Σ_r e^{2πi(λ-r)(l k' - k l')} <(T_(2(k-k'), l-l'))^{λ-r} g^{λ-r}, g^{λ-r}>,
/// the coefficient of c_{k,l}·conj(c_{k',l'}) in the Riesz quadratic form.
/// The phase comes out of the twisted-translate composition law; since
/// r(lk'-kl') is an integer it is constant across the r-sum. The r-sum is
/// exact and finite for FrequencyIndicator profiles and truncated with a
/// certified tail below eps otherwise (sinc^{2n} bound for B-spline profiles,
/// total-variation bound for general compact profiles).
std::complex<double> gramian_entry(const SeparableGenerator& g, std::pair<int, int> row,
                                   std::pair<int, int> col, double lambda, double eps);

/// Hermitian Gramian over a window; averages the matrix with its conjugate
/// transpose and records the maximum asymmetry. Throws std::runtime_error if
/// the asymmetry exceeds 1e-8 (a phase-convention bug, not roundoff).
GramianMatrix assemble_gramian(const SeparableGenerator& g, const Window& window, double lambda, double eps);

/// Oracle assembly: every inner product evaluated as a 2-D tensor-quadrature
/// double integral of pointwise twisted translates, with no use of the
/// composition-law reduction. Adjudicates the phase convention.
GramianMatrix assemble_gramian_bruteforce(const SeparableGenerator& g, const Window& window, double lambda,
                                          double eps, int quad_order = 24);

struct EigBounds {
    double min_eig = 0.0;
    double max_eig = 0.0;
    double residual = 0.0;  // 0 for the dense solve; Lanczos residual otherwise
};

/// Extreme eigenvalues of the Hermitian matrix: dense self-adjoint solve up
/// to dimension 4096, Lanczos with a fixed iteration budget beyond.
EigBounds eig_bounds(const GramianMatrix& G);

struct RieszScanReport {
    std::vector<double> lambda_grid;
    std::vector<std::string> window_labels;
    std::vector<int> window_dims;
    std::vector<std::vector<double>> min_eigs;  // [window][lambda]
    std::vector<std::vector<double>> max_eigs;
    std::vector<double> window_A_est;  // min over the grid, per window
    std::vector<double> window_B_est;  // max over the grid, per window
    double A_est = 0.0;                // min over grid and windows
    double B_est = 0.0;                // max over grid and windows
    bool riesz_consistent = false;     // A_est > 0 across every window scanned
};

/// Grid/window scan of the Riesz criterion. Estimates only: finite windows
/// and sampled λ can support or falsify, never certify, the a.e.-λ
/// infinite-lattice condition.
RieszScanReport riesz_scan(const SeparableGenerator& g, const std::vector<Window>& windows, int grid_size,
                           double eps);

struct FrameCheckReport {
    std::vector<double> lambda_grid;
    std::vector<double> inf_ratio;  // per λ, over trials
    std::vector<double> sup_ratio;
    double global_inf = 0.0;
    double global_sup = 0.0;
    int skipped = 0;  // trials with the quadratic form numerically in the kernel
};

/// Empirical frame-sequence check: for random coefficient vectors α the
/// analysis energy Σ_{k,l} |<Σ α f, f_(k,l)>|² (outer sum over an enlarged
/// window that captures every nonzero term) is compared with <Gα, α>.
FrameCheckReport frame_check(const SeparableGenerator& g, const Window& window,
                             const std::vector<double>& lambda_grid, int trials, unsigned long long seed = 0x9e3779b9u);

}  // namespace heisengram
