#include "resetctl/plant.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace resetctl {

double PlantParams::wn() const { return 2.0 * std::numbers::pi * resonance_hz; }
double PlantParams::mass() const { return 1.0 / (dc_gain * wn() * wn()); }
double PlantParams::damping() const { return 2.0 * damping_ratio / (dc_gain * wn()); }
double PlantParams::stiffness() const { return 1.0 / dc_gain; }

StateSpaceModel make_plant(const PlantParams& p) {
    if (!(p.resonance_hz > 0.0) || !(p.damping_ratio > 0.0) || !(p.dc_gain > 0.0))
        throw std::invalid_argument("plant parameters must be positive");
    const double w = p.wn();
    Matrix a(2, 2), b(2, 1), c(1, 2), d(1, 1);
    a << 0.0, 1.0, -w * w, -2.0 * p.damping_ratio * w;
    b << 0.0, p.dc_gain * w * w;
    c << 1.0, 0.0;
    d << 0.0;
    return StateSpaceModel(a, b, c, d);
}

StateSpaceModel precision_stage_plant() { return make_plant(PlantParams{}); }

}  // namespace resetctl
