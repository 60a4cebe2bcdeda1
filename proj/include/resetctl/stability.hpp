#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "resetctl/reset_element.hpp"

namespace resetctl {

/// Reset part (A_r, B_r, C_r, D_r) together with the non-reset controller part
/// in series with the plant (A_nrp, B_nrp, C_nrp, D_nrp), SISO.
struct StabilityProblem {
    StateSpaceModel reset_part;
    StateSpaceModel nonreset_plant;

    static StabilityProblem from_loop(const ResetController& controller,
                                      const StateSpaceModel& plant);
};

/// Witness of the restricted Lyapunov equation
///   P > 0,  A_cl' P + P A_cl < 0,  B0' P = C0,
/// with B0 selecting the reset-state rows and C0 = [P_rho, beta * C_nrp] in
/// the [x_r; x_nrp] ordering of the closed-loop matrix.
struct StabilityCertificate {
    Matrix P;
    Matrix beta;   // n_r x 1
    Matrix P_rho;  // n_r x n_r
    double min_eig_P = 0.0;
    double min_eig_neg_lyap = 0.0;  // smallest eigenvalue of -(A'P + PA)
    double equality_residual = 0.0;  // relative Frobenius residual of B0'P = C0
};

enum class StabilityStatus { Certified, Infeasible, Unknown };

struct StabilityResult {
    StabilityStatus status = StabilityStatus::Unknown;
    std::optional<StabilityCertificate> certificate;
    std::string detail;
};

/// Closed-loop flow matrix [[A_r, B_r C_nrp], [-B_nrp C_r, A_nrp]].
Matrix closed_loop_matrix(const StabilityProblem& problem);

/// Feasibility of the restricted Lyapunov equation. Returns Infeasible when
/// the closed-loop matrix is not Hurwitz (necessary condition), a verified
/// certificate on success, and Unknown when the search budget runs out --
/// search failure alone never claims instability. Deterministic per seed.
StabilityResult check_stability(const StabilityProblem& problem, std::uint64_t seed = 1);

/// Re-verification, independent of the search path: eigenvalue checks on P and
/// -(A'P + PA) plus the equality residual at the stated tolerances.
bool verify_certificate(const StabilityProblem& problem, StabilityCertificate& cert,
                        std::string* why = nullptr);

}  // namespace resetctl
