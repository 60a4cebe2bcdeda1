#pragma once

#include "resetctl/lti.hpp"

namespace resetctl {

/// Reset element: base LTI dynamics whose states all jump to gamma*x when the
/// loop error crosses zero. gamma = 1 is the base linear system, gamma = -1
/// extreme reset.
struct ResetElement {
    StateSpaceModel base;
    double gamma = 1.0;

    ResetElement() = default;
    ResetElement(StateSpaceModel b, double g);

    int reset_states() const { return base.states(); }
};

/// Series controller of Fig-1 shape: error -> resetting part -> linear part,
/// with a scalar gain applied at the linear stage output.
struct ResetController {
    ResetElement resetting;
    StateSpaceModel linear;
    double gain = 1.0;

    /// Factored form of the linear part, kept for serialization/reporting.
    std::vector<RationalTF> linear_factors;
};

/// Clegg integrator: integrator whose state resets.
ResetElement clegg(double gamma);

/// Generalized first-order reset element: unit-DC-gain lag 1/(s/wr + 1).
ResetElement gfore(double corner_rad_s, double gamma);

/// Same realization as gfore; named for its role as the reset taming pole of
/// the lead element (placed at alpha*wd in the designs).
ResetElement reset_taming_pole(double pole_rad_s, double gamma);

/// Jump map x+ = gamma*x. Dimension-checked.
Vector apply_reset(const Vector& state, const ResetElement& element);

}  // namespace resetctl
