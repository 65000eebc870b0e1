#include "heisengram/piecewise_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace heisengram {

PiecewisePolynomial::PiecewisePolynomial(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.empty() && pieces_.empty()) return;
    if (breakpoints_.size() != pieces_.size() + 1)
        throw std::invalid_argument("piecewise polynomial: need one more breakpoint than pieces");
    for (size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw std::invalid_argument("piecewise polynomial: breakpoints must be strictly increasing");
    normalize();
}

PiecewisePolynomial PiecewisePolynomial::indicator(const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("indicator: empty interval");
    return PiecewisePolynomial({a, b}, {Polynomial::constant(1)});
}

void PiecewisePolynomial::normalize() {
    // Trim zero pieces at the ends.
    size_t lo = 0, hi = pieces_.size();
    while (lo < hi && pieces_[lo].is_zero()) ++lo;
    while (hi > lo && pieces_[hi - 1].is_zero()) --hi;
    if (lo == hi) {
        breakpoints_.clear();
        pieces_.clear();
        return;
    }
    std::vector<Rational> bp(breakpoints_.begin() + lo, breakpoints_.begin() + hi + 1);
    std::vector<Polynomial> pc(pieces_.begin() + lo, pieces_.begin() + hi);
    // Merge adjacent intervals carrying the same polynomial.
    std::vector<Rational> mbp{bp.front()};
    std::vector<Polynomial> mpc;
    for (size_t i = 0; i < pc.size(); ++i) {
        if (!mpc.empty() && mpc.back() == pc[i]) {
            mbp.back() = bp[i + 1];
        } else {
            mpc.push_back(pc[i]);
            mbp.push_back(bp[i + 1]);
        }
    }
    breakpoints_ = std::move(mbp);
    pieces_ = std::move(mpc);
}

std::optional<std::pair<Rational, Rational>> PiecewisePolynomial::support() const {
    if (is_zero()) return std::nullopt;
    return std::make_pair(breakpoints_.front(), breakpoints_.back());
}

Rational PiecewisePolynomial::support_width() const {
    if (is_zero()) return 0;
    return breakpoints_.back() - breakpoints_.front();
}

int PiecewisePolynomial::degree() const {
    int d = -1;
    for (const auto& p : pieces_) d = std::max(d, p.degree());
    return d;
}

int PiecewisePolynomial::piece_index(const Rational& t) const {
    if (is_zero() || t < breakpoints_.front() || t > breakpoints_.back()) return -1;
    if (t == breakpoints_.back()) return static_cast<int>(pieces_.size()) - 1;
    // Last breakpoint <= t.
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return static_cast<int>(it - breakpoints_.begin()) - 1;
}

Rational PiecewisePolynomial::operator()(const Rational& t) const {
    const int i = piece_index(t);
    return i < 0 ? Rational(0) : pieces_[i](t);
}

double PiecewisePolynomial::operator()(double t) const {
    if (is_zero()) return 0.0;
    const int i = piece_index(rational_from_double(t));
    return i < 0 ? 0.0 : pieces_[i](t);
}

PiecewisePolynomial PiecewisePolynomial::shifted(const Rational& s) const {
    std::vector<Rational> bp(breakpoints_);
    for (auto& b : bp) b += s;
    std::vector<Polynomial> pc(pieces_.size());
    for (size_t i = 0; i < pieces_.size(); ++i) pc[i] = pieces_[i].with_argument_shifted(-s);
    return PiecewisePolynomial(std::move(bp), std::move(pc));
}

PiecewisePolynomial PiecewisePolynomial::restricted(const Rational& a, const Rational& b) const {
    if (is_zero() || !(a < b)) return zero();
    const Rational lo = std::max(a, breakpoints_.front());
    const Rational hi = std::min(b, breakpoints_.back());
    if (!(lo < hi)) return zero();
    std::vector<Rational> bp{lo};
    std::vector<Polynomial> pc;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const Rational seg_lo = std::max(lo, breakpoints_[i]);
        const Rational seg_hi = std::min(hi, breakpoints_[i + 1]);
        if (seg_lo < seg_hi) {
            pc.push_back(pieces_[i]);
            bp.push_back(seg_hi);
        }
    }
    return PiecewisePolynomial(std::move(bp), std::move(pc));
}

PiecewisePolynomial PiecewisePolynomial::scaled(const Rational& s) const {
    if (s == 0) return zero();
    std::vector<Polynomial> pc(pieces_.size());
    for (size_t i = 0; i < pieces_.size(); ++i) pc[i] = pieces_[i].scaled(s);
    return PiecewisePolynomial(breakpoints_, std::move(pc));
}

PiecewisePolynomial PiecewisePolynomial::derivative() const {
    std::vector<Polynomial> pc(pieces_.size());
    for (size_t i = 0; i < pieces_.size(); ++i) pc[i] = pieces_[i].derivative();
    return PiecewisePolynomial(breakpoints_, std::move(pc));
}

namespace {

// Combines two piecewise polynomials over the union/intersection of supports.
PiecewisePolynomial combine(const PiecewisePolynomial& f, const PiecewisePolynomial& g, bool product) {
    if (product && (f.is_zero() || g.is_zero())) return PiecewisePolynomial::zero();
    if (f.is_zero()) return product ? PiecewisePolynomial::zero() : g;
    if (g.is_zero()) return f;

    std::vector<Rational> cuts;
    cuts.insert(cuts.end(), f.breakpoints().begin(), f.breakpoints().end());
    cuts.insert(cuts.end(), g.breakpoints().begin(), g.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto piece_of = [](const PiecewisePolynomial& h, const Rational& lo, const Rational& hi) -> const Polynomial* {
        static const Polynomial kZero;
        if (h.is_zero() || hi <= h.breakpoints().front() || lo >= h.breakpoints().back()) return &kZero;
        const Rational mid = (lo + hi) / 2;
        auto it = std::upper_bound(h.breakpoints().begin(), h.breakpoints().end(), mid);
        const int i = static_cast<int>(it - h.breakpoints().begin()) - 1;
        if (i < 0 || i >= static_cast<int>(h.pieces().size())) return &kZero;
        return &h.pieces()[i];
    };

    std::vector<Rational> bp{cuts.front()};
    std::vector<Polynomial> pc;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Polynomial* a = piece_of(f, cuts[i], cuts[i + 1]);
        const Polynomial* b = piece_of(g, cuts[i], cuts[i + 1]);
        pc.push_back(product ? (*a) * (*b) : (*a) + (*b));
        bp.push_back(cuts[i + 1]);
    }
    return PiecewisePolynomial(std::move(bp), std::move(pc));
}

}  // namespace

PiecewisePolynomial PiecewisePolynomial::operator+(const PiecewisePolynomial& other) const {
    return combine(*this, other, false);
}

PiecewisePolynomial PiecewisePolynomial::operator-(const PiecewisePolynomial& other) const {
    return combine(*this, other.scaled(-1), false);
}

PiecewisePolynomial PiecewisePolynomial::operator*(const PiecewisePolynomial& other) const {
    return combine(*this, other, true);
}

Rational PiecewisePolynomial::integral() const {
    Rational acc = 0;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const Polynomial anti = pieces_[i].antiderivative();
        acc += anti(breakpoints_[i + 1]) - anti(breakpoints_[i]);
    }
    return acc;
}

Rational PiecewisePolynomial::integral(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return restricted(a, b).integral();
}

Rational PiecewisePolynomial::norm_sq() const { return ((*this) * (*this)).integral(); }

double PiecewisePolynomial::total_variation_bound() const {
    if (is_zero()) return 0.0;
    Rational jumps = 0;
    for (size_t i = 0; i < breakpoints_.size(); ++i) {
        const Rational left = (i == 0) ? Rational(0) : pieces_[i - 1](breakpoints_[i]);
        const Rational right = (i == breakpoints_.size() - 1) ? Rational(0) : pieces_[i](breakpoints_[i]);
        jumps += rational_abs(right - left);
    }
    const Rational dsq = derivative().norm_sq();
    return to_double(jumps) + std::sqrt(to_double(support_width() * dsq));
}

PiecewisePolynomial convolve(const PiecewisePolynomial& f, const PiecewisePolynomial& g) {
    if (f.is_zero() || g.is_zero()) return PiecewisePolynomial::zero();

    // Heaviside decomposition: h = Σ_j ΔP_j · 1{t >= s_j}, where ΔP_j is the
    // jump of the active polynomial at breakpoint s_j.
    auto heaviside = [](const PiecewisePolynomial& h) {
        std::vector<std::pair<Rational, Polynomial>> parts;
        Polynomial prev;
        for (size_t i = 0; i < h.pieces().size(); ++i) {
            parts.emplace_back(h.breakpoints()[i], h.pieces()[i] - prev);
            prev = h.pieces()[i];
        }
        parts.emplace_back(h.breakpoints().back(), -prev);
        return parts;
    };

    // (P·1{x>=s}) * (Q·1{x>=u}) (t) = [∫_s^{t-u} P(x) Q(t-x) dx] · 1{t >= s+u}.
    // The antiderivative in x of P(x)Q(t-x) is expanded as a bivariate table.
    auto pair_convolution = [](const Polynomial& P, const Rational& s, const Polynomial& Q, const Rational& u) {
        const auto& pa = P.coefficients();
        const auto& qb = Q.coefficients();
        // A[m][i]: coefficient of x^m t^i in the x-antiderivative of P(x)Q(t-x).
        const int xdim = P.degree() + Q.degree() + 2;
        const int tdim = Q.degree() + 1;
        std::vector<std::vector<Rational>> A(xdim + 1, std::vector<Rational>(tdim + 1, Rational(0)));
        for (int a = 0; a <= P.degree(); ++a) {
            if (pa[a] == 0) continue;
            for (int b = 0; b <= Q.degree(); ++b) {
                if (qb[b] == 0) continue;
                for (int i = 0; i <= b; ++i) {
                    const int m = a + b - i;  // power of x before integrating
                    Rational c = pa[a] * qb[b] * Rational(binomial(b, i));
                    if ((b - i) % 2 != 0) c = -c;
                    A[m + 1][i] += c / Rational(m + 1);
                }
            }
        }
        // R(t) = A(t-u, t) - A(s, t).
        Polynomial R;
        Polynomial x_pow = Polynomial::constant(1);  // (t-u)^m
        const Polynomial t_minus_u({-u, Rational(1)});
        for (int m = 0; m <= xdim; ++m) {
            std::vector<Rational> row_t(A[m].size());
            bool nonzero = false;
            for (size_t i = 0; i < A[m].size(); ++i) {
                row_t[i] = A[m][i];
                nonzero = nonzero || row_t[i] != 0;
            }
            if (nonzero) {
                const Polynomial row(std::move(row_t));
                R = R + row * x_pow;
                Rational spow = 1;
                for (int j = 0; j < m; ++j) spow *= s;
                R = R - row.scaled(spow);
            }
            x_pow = x_pow * t_minus_u;
        }
        return std::make_pair(s + u, R);
    };

    std::map<Rational, Polynomial> onsets;
    for (const auto& [s, P] : heaviside(f)) {
        for (const auto& [u, Q] : heaviside(g)) {
            if (P.is_zero() || Q.is_zero()) continue;
            auto [start, R] = pair_convolution(P, s, Q, u);
            auto [it, inserted] = onsets.emplace(start, R);
            if (!inserted) it->second = it->second + R;
        }
    }
    if (onsets.empty()) return PiecewisePolynomial::zero();

    std::vector<Rational> bp;
    std::vector<Polynomial> pc;
    Polynomial running;
    for (const auto& [start, R] : onsets) {
        if (!bp.empty()) pc.push_back(running);
        bp.push_back(start);
        running = running + R;
    }
    // Compact support: the accumulated polynomial past the last onset must
    // vanish, which nails the final breakpoint down to the last onset.
    if (!running.is_zero())
        throw std::logic_error("convolve: residual polynomial after last onset");
    return PiecewisePolynomial(std::move(bp), std::move(pc));
}

Rational integrate_product_shifted(const PiecewisePolynomial& p, const PiecewisePolynomial& q,
                                   const Rational& shift, const Rational& a, const Rational& b) {
    if (!(a < b)) return 0;
    // p(t + shift) = p shifted right by -shift.
    return (p.shifted(-shift) * q).integral(a, b);
}

namespace {

std::complex<double> modulated_piece_series(const Polynomial& piece, const Rational& lo, const Rational& hi,
                                            double omega) {
    // Center the piece so the series runs in |s| <= half width.
    const Rational c = (lo + hi) / 2;
    const Rational h = (hi - lo) / 2;
    const Rational neg_h = -h;
    const Polynomial pc = piece.with_argument_shifted(c);
    const double hd = to_double(h);

    // sup |pc| on [-h, h] and hence a bound on ∫|pc|.
    double sup = 0.0, hpow = 1.0;
    for (const auto& cf : pc.coefficients()) {
        sup += std::abs(to_double(cf)) * hpow;
        hpow *= hd;
    }
    const double int_abs = 2.0 * hd * sup;

    // Σ_m (iω)^m/m! μ_m with exact moments μ_m = ∫_{-h}^{h} s^m pc(s) ds.
    // Remainder after m terms is below int_abs·(|ω|h)^{m+1}/(m+1)!·e^{|ω|h}.
    std::complex<double> sum = 0.0;
    const std::complex<double> iw(0.0, omega);
    std::complex<double> iw_fact = 1.0;              // (iω)^m / m!
    double rem = int_abs * std::abs(omega) * hd * 1.3;
    Polynomial s_pow = Polynomial::constant(1);
    const Polynomial s_var({Rational(0), Rational(1)});
    for (int m = 0; m <= 80; ++m) {
        const Polynomial anti = (s_pow * pc).antiderivative();
        const Rational mu = anti(h) - anti(neg_h);
        sum += iw_fact * to_double(mu);
        if (rem < 1e-17 * (1.0 + std::abs(sum))) break;
        iw_fact *= iw / static_cast<double>(m + 1);
        rem *= std::abs(omega) * hd / static_cast<double>(m + 2);
        s_pow = s_pow * s_var;
    }
    return std::exp(std::complex<double>(0.0, omega * to_double(c))) * sum;
}

std::complex<double> modulated_piece_by_parts(const Polynomial& piece, const Rational& lo, const Rational& hi,
                                              double omega) {
    // ∫_a^b e^{iωt} P(t) dt = [e^{iωt} Σ_k (-1)^k P^{(k)}(t) / (iω)^{k+1}]_a^b
    std::vector<Polynomial> derivs{piece};
    while (!derivs.back().is_zero()) derivs.push_back(derivs.back().derivative());
    const std::complex<double> iw(0.0, omega);
    auto boundary = [&](double t) {
        std::complex<double> acc = 0.0;
        std::complex<double> denom = iw;
        double sign = 1.0;
        for (const auto& d : derivs) {
            if (d.is_zero()) break;
            acc += sign * d(t) / denom;
            denom *= iw;
            sign = -sign;
        }
        return std::exp(std::complex<double>(0.0, omega * t)) * acc;
    };
    return boundary(to_double(hi)) - boundary(to_double(lo));
}

}  // namespace

std::complex<double> modulated_integral(const PiecewisePolynomial& p, double omega) {
    if (p.is_zero()) return {0.0, 0.0};
    if (omega == 0.0) return {to_double(p.integral()), 0.0};
    const double width = to_double(p.support_width());
    const bool series = std::abs(omega) * width < 0.5;
    std::complex<double> acc = 0.0;
    for (size_t i = 0; i < p.pieces().size(); ++i) {
        const auto& lo = p.breakpoints()[i];
        const auto& hi = p.breakpoints()[i + 1];
        acc += series ? modulated_piece_series(p.pieces()[i], lo, hi, omega)
                      : modulated_piece_by_parts(p.pieces()[i], lo, hi, omega);
    }
    return acc;
}

}  // namespace heisengram
