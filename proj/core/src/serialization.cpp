#include "heisengram/serialization.hpp"

#include <stdexcept>

namespace heisengram {

Json to_json(const PiecewisePolynomial& p) {
    Json j;
    j["breakpoints"] = Json::array();
    j["pieces"] = Json::array();
    for (const auto& b : p.breakpoints()) j["breakpoints"].push_back(rational_to_string(b));
    for (const auto& piece : p.pieces()) {
        Json coeffs = Json::array();
        if (piece.is_zero()) coeffs.push_back("0");
        for (const auto& c : piece.coefficients()) coeffs.push_back(rational_to_string(c));
        j["pieces"].push_back(coeffs);
    }
    return j;
}

PiecewisePolynomial piecewise_from_json(const Json& j) {
    if (!j.contains("breakpoints") || !j.contains("pieces"))
        throw std::invalid_argument("piecewise polynomial JSON needs 'breakpoints' and 'pieces'");
    std::vector<Rational> bp;
    for (const auto& s : j.at("breakpoints")) bp.push_back(rational_from_string(s.get<std::string>()));
    std::vector<Polynomial> pieces;
    for (const auto& arr : j.at("pieces")) {
        std::vector<Rational> coeffs;
        for (const auto& s : arr) coeffs.push_back(rational_from_string(s.get<std::string>()));
        pieces.emplace_back(std::move(coeffs));
    }
    return PiecewisePolynomial(std::move(bp), std::move(pieces));
}

Json to_json(const TProfile& t) {
    Json j;
    if (t.kind == TProfile::Kind::TimeDomain) {
        j["kind"] = "time";
        j["h"] = to_json(t.h);
    } else {
        j["kind"] = "freq_indicator";
        j["p"] = t.p;
    }
    return j;
}

TProfile profile_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "time") return TProfile::time_domain(piecewise_from_json(j.at("h")));
    if (kind == "freq_indicator") return TProfile::frequency_indicator(j.at("p").get<int>());
    throw std::invalid_argument("t_part kind must be 'time' or 'freq_indicator'");
}

Json to_json(const SeparableGenerator& g) {
    Json j;
    j["u"] = to_json(g.u);
    j["v"] = to_json(g.v);
    j["t_part"] = to_json(g.t_part);
    return j;
}

SeparableGenerator generator_from_json(const Json& j) {
    SeparableGenerator g;
    g.u = piecewise_from_json(j.at("u"));
    g.v = piecewise_from_json(j.at("v"));
    g.t_part = profile_from_json(j.at("t_part"));
    if (g.u.is_zero() || g.v.is_zero()) throw std::invalid_argument("generator spatial factors must be nonzero");
    return g;
}

Json report_json(const MarginResult& r) {
    Json j;
    j["status"] = "estimated";
    j["p"] = r.p;
    j["lambda0"] = r.lambda0;
    j["margin"] = r.margin;
    j["curvature"] = r.curvature;
    j["critical_points"] = r.critical_points;
    j["unique_minimum"] = r.unique_minimum;
    return j;
}

Json report_json(const ClassicalRieszReport& r) {
    Json j;
    j["status"] = "estimated";
    j["lambda_grid"] = r.lambda_grid;
    j["phi_values"] = r.phi_values;
    j["A_est"] = r.A_est;
    j["B_est"] = r.B_est;
    j["truncation_radius"] = r.truncation_radius;
    j["tail_bound"] = r.tail_bound;
    return j;
}

Json report_json(const GramianMatrix& g, const EigBounds& bounds) {
    Json j;
    j["status"] = "estimated";
    j["lambda"] = g.lambda;
    j["eps"] = g.eps;
    j["tail_bound"] = g.tail_bound;
    j["asymmetry"] = g.asymmetry;
    Json idx = Json::array();
    for (const auto& [k, l] : g.indices) idx.push_back(Json::array({k, l}));
    j["indices"] = idx;
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < g.entries.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < g.entries.cols(); ++c)
            row.push_back(Json::array({g.entries(i, c).real(), g.entries(i, c).imag()}));
        rows.push_back(row);
    }
    j["entries"] = rows;
    j["min_eig"] = bounds.min_eig;
    j["max_eig"] = bounds.max_eig;
    j["eig_residual"] = bounds.residual;
    return j;
}

Json report_json(const RieszScanReport& r) {
    Json j;
    j["status"] = "estimated";
    j["lambda_grid"] = r.lambda_grid;
    j["window_labels"] = r.window_labels;
    j["window_dims"] = r.window_dims;
    j["min_eigs"] = r.min_eigs;
    j["max_eigs"] = r.max_eigs;
    j["window_A_est"] = r.window_A_est;
    j["window_B_est"] = r.window_B_est;
    j["A_est"] = r.A_est;
    j["B_est"] = r.B_est;
    j["verdict"] = r.riesz_consistent ? "Riesz-consistent" : "not-established";
    return j;
}

Json report_json(const FrameCheckReport& r) {
    Json j;
    j["status"] = "estimated";
    j["lambda_grid"] = r.lambda_grid;
    j["inf_ratio"] = r.inf_ratio;
    j["sup_ratio"] = r.sup_ratio;
    j["global_inf"] = r.global_inf;
    j["global_sup"] = r.global_sup;
    j["skipped"] = r.skipped;
    return j;
}

Json report_json(const ObliqueDual& dual, double biorthogonality_max_dev) {
    Json j;
    j["status"] = dual.exact ? "exact" : "estimated";
    Json coeffs = Json::array();
    for (size_t i = 0; i < dual.indices.size(); ++i) {
        Json c;
        c["index"] = Json::array({dual.indices[i].k, dual.indices[i].l, dual.indices[i].m});
        if (dual.exact) c["value"] = rational_to_string(dual.coefficients[i]);
        c["value_numeric"] = dual.coefficients_numeric[i];
        coeffs.push_back(c);
    }
    j["coefficients"] = coeffs;
    if (dual.dual) j["dual_t_poly"] = to_json(dual.dual->t_part.h);
    j["biorthogonality_max_dev"] = biorthogonality_max_dev;
    return j;
}

}  // namespace heisengram
