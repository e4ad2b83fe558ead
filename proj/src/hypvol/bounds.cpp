#include <cmath>
#include <numbers>

#include "divlink/error.hpp"
#include "divlink/hypvol.hpp"

namespace divlink {

VolumeCoefficients volume_coefficients(const TypeCensus& c) {
    if (hopf_case(c)) throw Error("hopf-case", "Hopf link, non-hyperbolic");
    if (!c.others.empty()) throw Error("not-prime-admissible", "census contains types without a block");
    if (c.total() == 0) throw Error("no-double-point", "the divide has no double point");
    return {10LL * c.n3, 4LL * c.n1 + 2LL * c.n4 + c.n5, c.n2};
}

double volume_bound(const TypeCensus& c) { return volume_coefficients(c).value(constants()); }

double fkp_ratio(double slope_length) {
    if (!(slope_length > 2 * std::numbers::pi))
        throw Error("bound-inapplicable", "slope length must exceed 2 pi");
    double r = 2 * std::numbers::pi / slope_length;
    return std::pow(1 - r * r, 1.5);
}

double fkp_lower_bound(double v_unfilled, double slope_length) { return fkp_ratio(slope_length) * v_unfilled; }

} // namespace divlink
