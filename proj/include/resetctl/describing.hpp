#pragma once

#include "resetctl/reset_element.hpp"

namespace resetctl {

/// Harmonic correction matrix Theta_D(w) of the reset-element describing
/// function:
///   Theta_D = -(2 w^2 / pi) Delta [Gamma_D - Lambda^-1]
///   Lambda  = w^2 I + A^2
///   Delta   = I + e^{(pi/w) A}
///   Delta_D = I + gamma e^{(pi/w) A}
///   Gamma_D = Delta_D^-1 (gamma I) Delta Lambda^-1
/// Throws when Lambda or Delta_D is singular (possible for gamma = -1).
Matrix theta_d(const ResetElement& element, double omega);

/// Sinusoidal-input describing function
///   G_DF(jw) = C (jwI - A)^-1 B (I + j Theta_D) + D.
/// Equals the base linear response exactly when gamma = 1.
Complex df(const ResetElement& element, double omega);

/// df evaluated over a grid.
FrequencyCurve df_curve(const ResetElement& element, const std::vector<double>& omega_grid);

/// Ratio of the -3 dB frequency of a unit-DC-gain GFORE's describing-function
/// magnitude to the linear corner frequency. 1 exactly for gamma = 1. Root not
/// bracketed in [wr/100, 100 wr] (happens toward gamma = -1, where the DF
/// magnitude plateaus above -3 dB) is reported as an error.
double cutoff_ratio_beta(double gamma);

}  // namespace resetctl
