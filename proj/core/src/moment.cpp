#include "heisengram/moment.hpp"

#include "heisengram/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace heisengram {

TranslateIndex lattice_product(const TranslateIndex& a, const TranslateIndex& b) {
    return {a.k + b.k, a.l + b.l, a.m + b.m + (b.k * a.l - b.l * a.k)};
}

TranslateIndex lattice_inverse(const TranslateIndex& a) { return {-a.k, -a.l, -a.m}; }

std::vector<TranslateIndex> support_index_set(int n, int M) {
    if (n < 1 || M < 1) throw std::invalid_argument("support_index_set: n and M must be positive");
    std::vector<TranslateIndex> out;
    for (int k = -(n - 1); k <= 0; ++k)
        for (int l = -(n - 1); l <= 0; ++l)
            for (int m = -M - n + 2; m <= n - 1; ++m) out.push_back({k, l, m});
    return out;
}

namespace {

const PiecewisePolynomial& time_part(const SeparableGenerator& g, const char* who) {
    if (g.t_part.kind != TProfile::Kind::TimeDomain)
        throw std::invalid_argument(std::string(who) + ": time-domain profile required");
    return g.t_part.h;
}

bool shear_free(const TranslateIndex& w) { return w.k == 0 && w.l == 0; }

Rational exact_pair_integral(const SeparableGenerator& f, const TranslateIndex& wa,
                             const SeparableGenerator& g, const TranslateIndex& wb, bool restrict_to_Q) {
    const auto& fh = time_part(f, "translate_pair_integral");
    const auto& gh = time_part(g, "translate_pair_integral");
    PiecewisePolynomial px = f.u * g.u;
    PiecewisePolynomial py = f.v * g.v;
    PiecewisePolynomial pt = fh.shifted(wa.m) * gh.shifted(wb.m);
    if (restrict_to_Q) {
        px = px.restricted(0, 2);
        py = py.restricted(0, 1);
        pt = pt.restricted(0, 1);
    }
    return px.integral() * py.integral() * pt.integral();
}

double quad_pair_integral(const SeparableGenerator& f, const TranslateIndex& wa, const SeparableGenerator& g,
                          const TranslateIndex& wb, bool restrict_to_Q) {
    const auto& fh = time_part(f, "translate_pair_integral");
    const auto& gh = time_part(g, "translate_pair_integral");
    PiecewisePolynomial px = f.u.shifted(2 * wa.k) * g.u.shifted(2 * wb.k);
    PiecewisePolynomial py = f.v.shifted(wa.l) * g.v.shifted(wb.l);
    if (restrict_to_Q) {
        px = px.restricted(0, 2);
        py = py.restricted(0, 1);
    }
    if (px.is_zero() || py.is_zero()) return 0.0;

    // Conservative t-overlap test under the shear range.
    const auto xs = px.support();
    const auto ys = py.support();
    auto shear_range = [&](const TranslateIndex& w) {
        const double xlo = to_double(xs->first), xhi = to_double(xs->second);
        const double ylo = to_double(ys->first), yhi = to_double(ys->second);
        // c(x,y) = m - k·y + l·x/2
        const double c1 = w.m - w.k * ylo + 0.5 * w.l * xlo;
        const double c2 = w.m - w.k * ylo + 0.5 * w.l * xhi;
        const double c3 = w.m - w.k * yhi + 0.5 * w.l * xlo;
        const double c4 = w.m - w.k * yhi + 0.5 * w.l * xhi;
        return std::make_pair(std::min({c1, c2, c3, c4}), std::max({c1, c2, c3, c4}));
    };
    const auto [ca_lo, ca_hi] = shear_range(wa);
    const auto [cb_lo, cb_hi] = shear_range(wb);
    const auto fsup = fh.support();
    const auto gsup = gh.support();
    double ta_lo = to_double(fsup->first) + ca_lo, ta_hi = to_double(fsup->second) + ca_hi;
    double tb_lo = to_double(gsup->first) + cb_lo, tb_hi = to_double(gsup->second) + cb_hi;
    if (restrict_to_Q) {
        ta_lo = std::max(ta_lo, 0.0);
        ta_hi = std::min(ta_hi, 1.0);
        tb_lo = std::max(tb_lo, 0.0);
        tb_hi = std::min(tb_hi, 1.0);
    }
    if (!(ta_lo < ta_hi) || !(tb_lo < tb_hi) || !(std::max(ta_lo, tb_lo) < std::min(ta_hi, tb_hi))) return 0.0;

    const auto integrand = [&](double x, double y) -> std::complex<double> {
        const Rational ca = rational_from_double(wa.m - wa.k * y + 0.5 * wa.l * x);
        const Rational cb = rational_from_double(wb.m - wb.k * y + 0.5 * wb.l * x);
        PiecewisePolynomial pt = fh.shifted(ca) * gh.shifted(cb);
        if (restrict_to_Q) pt = pt.restricted(0, 1);
        return {px(x) * py(y) * to_double(pt.integral()), 0.0};
    };

    std::vector<double> xb, yb;
    for (const auto& b : px.breakpoints()) xb.push_back(to_double(b));
    for (const auto& b : py.breakpoints()) yb.push_back(to_double(b));

    auto subdivide = [](const std::vector<double>& breaks) {
        std::vector<double> out;
        for (size_t i = 0; i + 1 < breaks.size(); ++i) {
            out.push_back(breaks[i]);
            out.push_back(0.5 * (breaks[i] + breaks[i + 1]));
        }
        out.push_back(breaks.back());
        return out;
    };

    double prev = tensor_integrate(integrand, xb, yb, 12).real();
    for (int round = 0; round < 3; ++round) {
        xb = subdivide(xb);
        yb = subdivide(yb);
        const double next = tensor_integrate(integrand, xb, yb, 16).real();
        if (std::abs(next - prev) <= 1e-12 * std::max(1.0, std::abs(next))) return next;
        prev = next;
    }
    return prev;
}

}  // namespace

double translate_pair_integral(const SeparableGenerator& f, const TranslateIndex& wa,
                               const SeparableGenerator& g, const TranslateIndex& wb, bool restrict_to_Q) {
    if (shear_free(wa) && shear_free(wb)) return to_double(exact_pair_integral(f, wa, g, wb, restrict_to_Q));
    return quad_pair_integral(f, wa, g, wb, restrict_to_Q);
}

MomentSystem restricted_gram(const SeparableGenerator& phi, const std::vector<TranslateIndex>& indices) {
    time_part(phi, "restricted_gram");
    if (indices.empty()) throw std::invalid_argument("restricted_gram: empty index set");
    MomentSystem sys;
    sys.indices = indices;
    sys.exact = std::all_of(indices.begin(), indices.end(), [](const TranslateIndex& w) { return shear_free(w); });
    const int n = static_cast<int>(indices.size());
    sys.gram.resize(n, n);
    if (sys.exact) sys.gram_exact.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (sys.exact) {
                const Rational val = exact_pair_integral(phi, indices[i], phi, indices[j], /*restrict_to_Q=*/true);
                sys.gram_exact[i][j] = val;
                sys.gram_exact[j][i] = val;
                sys.gram(i, j) = sys.gram(j, i) = to_double(val);
            } else {
                const double val = translate_pair_integral(phi, indices[i], phi, indices[j], /*restrict_to_Q=*/true);
                sys.gram(i, j) = sys.gram(j, i) = val;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (indices[i] == TranslateIndex{0, 0, 0}) sys.rhs_index = i;
    return sys;
}

ExistenceVerdict existence_test(const MomentSystem& system) {
    if (system.rhs_index < 0)
        throw std::invalid_argument("existence_test: index set does not contain (0,0,0)");
    ExistenceVerdict verdict;
    const int n = static_cast<int>(system.indices.size());
    if (system.exact) {
        verdict.rank_full = rational_rank(system.gram_exact);
        RationalMatrix sub;
        for (int i = 0; i < n; ++i) {
            if (i == system.rhs_index) continue;
            std::vector<Rational> row;
            for (int j = 0; j < n; ++j)
                if (j != system.rhs_index) row.push_back(system.gram_exact[i][j]);
            sub.push_back(std::move(row));
        }
        verdict.rank_without_target = sub.empty() ? 0 : rational_rank(sub);
    } else {
        auto rank_of = [](const Eigen::MatrixXd& m) {
            if (m.size() == 0) return 0;
            Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
            lu.setThreshold(1e-10);
            return static_cast<int>(lu.rank());
        };
        verdict.rank_full = rank_of(system.gram);
        Eigen::MatrixXd sub(n - 1, n - 1);
        int r = 0;
        for (int i = 0; i < n; ++i) {
            if (i == system.rhs_index) continue;
            int c = 0;
            for (int j = 0; j < n; ++j) {
                if (j == system.rhs_index) continue;
                sub(r, c++) = system.gram(i, j);
            }
            ++r;
        }
        verdict.rank_without_target = rank_of(sub);
    }
    // Lemma-2.4 style: the target lies outside the span of the others exactly
    // when adjoining it increases the Gram rank.
    verdict.solvable = verdict.rank_full == verdict.rank_without_target + 1;
    return verdict;
}

ObliqueDual solve_dual(const SeparableGenerator& phi, const MomentSystem& system) {
    if (system.rhs_index < 0) throw std::invalid_argument("solve_dual: index set does not contain (0,0,0)");
    const auto& h = time_part(phi, "solve_dual");
    const int n = static_cast<int>(system.indices.size());
    ObliqueDual dual;
    dual.indices = system.indices;

    if (system.exact) {
        std::vector<Rational> rhs(n, Rational(0));
        rhs[system.rhs_index] = 1;
        const RationalSolveResult sol = rational_solve(system.gram_exact, rhs);
        if (!sol.kernel_vector.empty()) dual.kernel_diagnostic = sol.kernel_vector;
        if (!sol.solvable) {
            std::ostringstream msg;
            msg << "solve_dual: singular moment system; kernel vector (";
            for (size_t i = 0; i < sol.kernel_vector.size(); ++i)
                msg << (i ? ", " : "") << rational_to_string(sol.kernel_vector[i]);
            msg << ")";
            throw std::runtime_error(msg.str());
        }
        dual.coefficients = sol.solution;
        dual.exact = true;
        dual.coefficients_numeric.reserve(n);
        for (const auto& d : dual.coefficients) dual.coefficients_numeric.push_back(to_double(d));

        PiecewisePolynomial combo;
        for (int i = 0; i < n; ++i)
            combo = combo + h.shifted(system.indices[i].m).scaled(dual.coefficients[i]);
        SeparableGenerator d;
        d.u = phi.u.restricted(0, 2);
        d.v = phi.v.restricted(0, 1);
        d.t_part = TProfile::time_domain(combo.restricted(0, 1));
        dual.dual = std::move(d);
        return dual;
    }

    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(system.rhs_index) = 1.0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(system.gram);
    lu.setThreshold(1e-10);
    if (lu.rank() < n) {
        const Eigen::MatrixXd kern = lu.kernel();
        for (int i = 0; i < n; ++i) dual.kernel_diagnostic.push_back(rational_from_double(kern(i, 0)));
        std::ostringstream msg;
        msg << "solve_dual: numerically singular moment system (rank " << lu.rank() << " of " << n << ")";
        throw std::runtime_error(msg.str());
    }
    const Eigen::VectorXd d = lu.solve(rhs);
    dual.coefficients_numeric.assign(d.data(), d.data() + n);
    dual.exact = false;
    return dual;
}

double verify_biorthogonality(const SeparableGenerator& phi, const ObliqueDual& dual, int kmax, int lmax,
                              int mmax) {
    if (!dual.dual) throw std::invalid_argument("verify_biorthogonality: dual generator unavailable");
    double max_dev = 0.0;
    for (int k = -kmax; k <= kmax; ++k)
        for (int l = -lmax; l <= lmax; ++l)
            for (int m = -mmax; m <= mmax; ++m) {
                const TranslateIndex w{k, l, m};
                const double beta = translate_pair_integral(phi, {0, 0, 0}, *dual.dual, w, false);
                const double target = (k == 0 && l == 0 && m == 0) ? 1.0 : 0.0;
                max_dev = std::max(max_dev, std::abs(beta - target));
            }
    return max_dev;
}

double verify_reconstruction(const SeparableGenerator& phi, const ObliqueDual& dual,
                             const std::map<TranslateIndex, double>& coefficients) {
    if (!dual.dual) throw std::invalid_argument("verify_reconstruction: dual generator unavailable");
    if (coefficients.empty()) return 0.0;
    const SeparableGenerator& dg = *dual.dual;
    const auto& h = time_part(phi, "verify_reconstruction");
    const auto& hd = time_part(dg, "verify_reconstruction");

    // Interaction set B = {a : <L_a phi, dual> can be nonzero}, bounded by
    // support arithmetic with shear slack.
    const double wu = to_double(phi.u.support_width()) + to_double(dg.u.support_width());
    const double wv = to_double(phi.v.support_width()) + to_double(dg.v.support_width());
    const double wh = to_double(h.support_width()) + to_double(hd.support_width());
    const int K = static_cast<int>(std::ceil(wu / 2.0));
    const int L = static_cast<int>(std::ceil(wv));
    const auto vs = dg.v.support();
    const auto us = dg.u.support();
    const double ymax = std::max(std::abs(to_double(vs->first)), std::abs(to_double(vs->second)));
    const double xmax = std::max(std::abs(to_double(us->first)), std::abs(to_double(us->second)));
    const int MB = static_cast<int>(std::ceil(wh + K * ymax + 0.5 * L * xmax)) + 1;

    std::map<TranslateIndex, double> beta_cache;
    auto beta = [&](const TranslateIndex& a) {
        if (std::abs(a.k) > K || std::abs(a.l) > L || std::abs(a.m) > MB) return 0.0;
        auto it = beta_cache.find(a);
        if (it == beta_cache.end())
            it = beta_cache.emplace(a, translate_pair_integral(phi, a, dg, {0, 0, 0}, false)).first;
        return it->second;
    };

    std::set<TranslateIndex> recovered_window;
    for (const auto& [w_prime, c] : coefficients) {
        (void)c;
        for (int k = -K; k <= K; ++k)
            for (int l = -L; l <= L; ++l)
                for (int m = -MB; m <= MB; ++m)
                    recovered_window.insert(lattice_product(w_prime, lattice_inverse(TranslateIndex{k, l, m})));
    }
    for (const auto& [w, c] : coefficients) {
        (void)c;
        recovered_window.insert(w);
    }

    double num = 0.0, den = 0.0;
    for (const auto& [w_prime, c] : coefficients) den += c * c;
    for (const auto& w : recovered_window) {
        double recovered = 0.0;
        for (const auto& [w_prime, c] : coefficients)
            recovered += c * beta(lattice_product(lattice_inverse(w), w_prime));
        const auto it = coefficients.find(w);
        const double truth = it == coefficients.end() ? 0.0 : it->second;
        num += (recovered - truth) * (recovered - truth);
    }
    return std::sqrt(num / den);
}

}  // namespace heisengram
