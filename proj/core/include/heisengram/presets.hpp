#pragma once

#include "heisengram/heisenberg.hpp"

#include <string>
#include <vector>

namespace heisengram {

/// Named generators used throughout:
///   "example33:p=N"       χ_[0,2](x)·χ_[0,2](y), ĥ = χ_[0,N]       (N >= 3)
///   "prop34:bspline:n=N"  χ_[0,2](x)·χ_[0,1](y), h = B_N
///   "prop34:freq:p=N"     χ_[0,2](x)·χ_[0,1](y), ĥ = χ_[0,N]
///   "example43"           χ_[0,2](x)·χ_[0,1](y), h = B_3
/// Throws std::invalid_argument for unknown names.
SeparableGenerator make_preset(const std::string& name);

std::vector<std::string> preset_names();

}  // namespace heisengram
