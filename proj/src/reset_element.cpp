#include "resetctl/reset_element.hpp"

#include <stdexcept>
#include <string>

namespace resetctl {

ResetElement::ResetElement(StateSpaceModel b, double g) : base(std::move(b)), gamma(g) {
    if (!(gamma >= -1.0 && gamma <= 1.0))
        throw std::invalid_argument("gamma must lie in [-1, 1], got " + std::to_string(g));
    if (base.inputs() != 1 || base.outputs() != 1)
        throw std::invalid_argument("reset element must be SISO");
}

ResetElement clegg(double gamma) {
    Matrix a = Matrix::Zero(1, 1);
    Matrix b = Matrix::Ones(1, 1);
    Matrix c = Matrix::Ones(1, 1);
    Matrix d = Matrix::Zero(1, 1);
    return ResetElement(StateSpaceModel(a, b, c, d), gamma);
}

ResetElement gfore(double corner_rad_s, double gamma) {
    if (!(corner_rad_s > 0.0))
        throw std::invalid_argument("gfore: corner frequency must be positive, got " +
                                    std::to_string(corner_rad_s));
    Matrix a(1, 1), b(1, 1), c(1, 1), d(1, 1);
    a(0, 0) = -corner_rad_s;
    b(0, 0) = corner_rad_s;
    c(0, 0) = 1.0;
    d(0, 0) = 0.0;
    return ResetElement(StateSpaceModel(a, b, c, d), gamma);
}

ResetElement reset_taming_pole(double pole_rad_s, double gamma) {
    if (!(pole_rad_s > 0.0))
        throw std::invalid_argument("reset_taming_pole: pole frequency must be positive, got " +
                                    std::to_string(pole_rad_s));
    return gfore(pole_rad_s, gamma);
}

Vector apply_reset(const Vector& state, const ResetElement& element) {
    if (state.size() != element.reset_states())
        throw std::invalid_argument("apply_reset: state dimension " + std::to_string(state.size()) +
                                    " does not match element (" +
                                    std::to_string(element.reset_states()) + " reset states)");
    return element.gamma * state;
}

}  // namespace resetctl
