#pragma once

#include "heisengram/bspline.hpp"
#include "heisengram/gramian.hpp"
#include "heisengram/margin.hpp"
#include "heisengram/moment.hpp"

#include <json.hpp>

#include <string>

namespace heisengram {

using Json = nlohmann::json;

/// {"breakpoints": ["num/den", ...], "pieces": [["c0", "c1", ...], ...]}
Json to_json(const PiecewisePolynomial& p);
PiecewisePolynomial piecewise_from_json(const Json& j);

/// {"kind": "time", "h": <pp>} or {"kind": "freq_indicator", "p": N}
Json to_json(const TProfile& t);
TProfile profile_from_json(const Json& j);

/// {"u": <pp>, "v": <pp>, "t_part": <profile>}
Json to_json(const SeparableGenerator& g);
SeparableGenerator generator_from_json(const Json& j);

Json report_json(const MarginResult& r);
Json report_json(const ClassicalRieszReport& r);
Json report_json(const GramianMatrix& g, const EigBounds& bounds);
Json report_json(const RieszScanReport& r);
Json report_json(const FrameCheckReport& r);
/// {"coefficients": [...], "dual_t_poly": <pp>, "biorthogonality_max_dev": x, ...}
Json report_json(const ObliqueDual& dual, double biorthogonality_max_dev);

}  // namespace heisengram
