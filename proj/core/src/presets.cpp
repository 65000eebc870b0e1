#include "heisengram/presets.hpp"

#include "heisengram/bspline.hpp"

#include <stdexcept>

namespace heisengram {

namespace {

int parse_suffix(const std::string& name, const std::string& key) {
    const auto pos = name.rfind(key);
    if (pos == std::string::npos) throw std::invalid_argument("preset '" + name + "': missing " + key + "N");
    try {
        const int v = std::stoi(name.substr(pos + key.size()));
        if (v < 1) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("preset '" + name + "': bad numeric suffix");
    }
}

}  // namespace

SeparableGenerator make_preset(const std::string& name) {
    SeparableGenerator g;
    if (name.rfind("example33", 0) == 0) {
        g.u = PiecewisePolynomial::indicator(0, 2);
        g.v = PiecewisePolynomial::indicator(0, 2);
        g.t_part = TProfile::frequency_indicator(parse_suffix(name, "p="));
        return g;
    }
    if (name.rfind("prop34:bspline", 0) == 0) {
        g.u = PiecewisePolynomial::indicator(0, 2);
        g.v = PiecewisePolynomial::indicator(0, 1);
        g.t_part = TProfile::time_domain(bspline(parse_suffix(name, "n=")));
        return g;
    }
    if (name.rfind("prop34:freq", 0) == 0) {
        g.u = PiecewisePolynomial::indicator(0, 2);
        g.v = PiecewisePolynomial::indicator(0, 1);
        g.t_part = TProfile::frequency_indicator(parse_suffix(name, "p="));
        return g;
    }
    if (name == "example43") {
        g.u = PiecewisePolynomial::indicator(0, 2);
        g.v = PiecewisePolynomial::indicator(0, 1);
        g.t_part = TProfile::time_domain(bspline(3));
        return g;
    }
    throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
    return {"example33:p=3", "prop34:bspline:n=3", "prop34:freq:p=3", "example43"};
}

}  // namespace heisengram
