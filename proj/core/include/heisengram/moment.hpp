#pragma once

#include "heisengram/heisenberg.hpp"
#include "heisengram/rational_linalg.hpp"

#include <Eigen/Dense>

#include <compare>
#include <map>
#include <optional>
#include <vector>

namespace heisengram {

/// Index (k,l,m) of the lattice point (2k, l, m).
struct TranslateIndex {
    int k = 0;
    int l = 0;
    int m = 0;
    auto operator<=>(const TranslateIndex&) const = default;
};

/// Lattice group law: (2k,l,m)·(2k',l',m') = (2(k+k'), l+l', m+m'+(k'l-kl')).
TranslateIndex lattice_product(const TranslateIndex& a, const TranslateIndex& b);
TranslateIndex lattice_inverse(const TranslateIndex& a);

/// The fundamental box Q = [0,2]x[0,1]x[0,1] supporting the generalized dual.
struct DualRegion {
    static constexpr double x_hi = 2.0;
    static constexpr double y_hi = 1.0;
    static constexpr double t_hi = 1.0;
};

/// Index set A for a generator supported in [0,2n]x[0,n]x[0,M]:
/// -(n-1) <= k,l <= 0 and -M-n+1 < m < n (strict), ordered lexicographically
/// in (k,l,m).
std::vector<TranslateIndex> support_index_set(int n, int M);

/// Restricted Gram system of the moment problem
/// <L_a φ, (L_b φ)·χ_Q> = δ_{a,0} over the given indices.
struct MomentSystem {
    std::vector<TranslateIndex> indices;
    bool exact = false;            // all indices have k = l = 0, entries rational
    RationalMatrix gram_exact;     // populated on the exact path
    Eigen::MatrixXd gram;          // numeric mirror, always populated
    int rhs_index = -1;            // position of (0,0,0); the right-hand side is that unit vector
};

/// Gram matrix of Q-restricted lattice translates of phi (time-domain profile
/// required). Exact rational when every index has k = l = 0 (the t-shift then
/// decouples); otherwise deterministic tensor quadrature including the
/// (2ky - lx)/2 shear, refined to 1e-12 stability.
MomentSystem restricted_gram(const SeparableGenerator& phi, const std::vector<TranslateIndex>& indices);

struct ExistenceVerdict {
    bool solvable = false;
    int rank_full = 0;
    int rank_without_target = 0;  // Gram rank of the family with the target removed
};

/// Moment-problem solvability: the target restricted translate must lie
/// outside the span of the others, i.e. including it must raise the Gram rank.
ExistenceVerdict existence_test(const MomentSystem& system);

/// Coefficients d and the assembled dual generator
/// φ̃ = [Σ_{(k,l,m)∈A} d_{k,l,m} L_(2k,l,m) φ]·χ_Q.
struct ObliqueDual {
    std::vector<TranslateIndex> indices;
    std::vector<Rational> coefficients;        // aligned with indices (exact path)
    std::vector<double> coefficients_numeric;  // always populated
    bool exact = false;
    /// Separable form, available when every contributing index has k = l = 0:
    /// u|[0,2] · v|[0,1] · (Σ_m d_m h(·-m))|[0,1].
    std::optional<SeparableGenerator> dual;
    std::vector<Rational> kernel_diagnostic;  // nonzero kernel vector when the system was singular
};

/// Solves gram·d = e_(0,0,0) (exact rational on the fast path) and assembles
/// the dual generator. Throws std::runtime_error with the kernel recorded in
/// the exception message if the system is singular and inconsistent.
ObliqueDual solve_dual(const SeparableGenerator& phi, const MomentSystem& system);

/// max over |k|<=kmax, |l|<=lmax, |m|<=mmax of |<φ, L_(2k,l,m) φ̃> - δ|.
double verify_biorthogonality(const SeparableGenerator& phi, const ObliqueDual& dual, int kmax, int lmax,
                              int mmax);

/// Builds f = Σ c_w L_w φ, recovers coefficients through <f, L_w φ̃> over an
/// enlarged window, and returns ||recovered - c|| / ||c||.
double verify_reconstruction(const SeparableGenerator& phi, const ObliqueDual& dual,
                             const std::map<TranslateIndex, double>& coefficients);

/// <L_wa f, L_wb g> over the given box (or over all of R³ when box_t is
/// unset), for separable time-domain generators. Exact when both shears
/// vanish; support-exact zero detection; tensor quadrature otherwise.
double translate_pair_integral(const SeparableGenerator& f, const TranslateIndex& wa,
                               const SeparableGenerator& g, const TranslateIndex& wb,
                               bool restrict_to_Q);

}  // namespace heisengram
