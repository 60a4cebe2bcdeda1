#pragma once

#include "resetctl/lti.hpp"

namespace resetctl {

/// Second-order mass-spring-damper stage model with unit DC gain:
///   G(s) = dc * wn^2 / (s^2 + 2 zeta wn s + wn^2)
/// Equivalently 1/(m s^2 + c s + k) with m = 1/(dc wn^2), c = 2 zeta/(dc wn),
/// k = 1/dc -- the inverse-model parameters the feedforward uses.
struct PlantParams {
    double resonance_hz = 10.0;
    double damping_ratio = 0.015;
    double dc_gain = 1.0;

    double wn() const;
    double mass() const;
    double damping() const;
    double stiffness() const;
};

StateSpaceModel make_plant(const PlantParams& p);

/// Default desk-scale stage: 10 Hz resonance, damping ratio 0.015, DC gain 1.
StateSpaceModel precision_stage_plant();

}  // namespace resetctl
