#pragma once

#include <cstdint>
#include <optional>

#include "resetctl/reset_element.hpp"

namespace resetctl {

struct SimConfig {
    double dt = 1.0 / 20000.0;
    double duration = 1.0;
    std::uint64_t seed = 1;
    /// Per-sample additive sequence injected at the measurement point n.
    /// Empty means no noise. Must match the sample count when present.
    std::vector<double> noise;
    /// Optional output quantizer (interferometer resolution); 0 disables.
    double quantizer = 0.0;

    std::size_t samples() const;
};

struct SimTrace {
    std::vector<double> t;
    std::vector<double> r;
    std::vector<double> e;  // controller error r - y_meas - n
    std::vector<double> u;  // feedback control effort (before feedforward)
    std::vector<double> y;  // true plant output
    std::vector<double> xr;  // first reset state, when the controller has one
    std::size_t resets = 0;
};

/// Zero-order-hold discretization via the augmented-block matrix exponential.
struct DiscreteSS {
    Matrix A;
    Matrix B;
};
DiscreteSS discretize(const StateSpaceModel& sys, double dt);

/// Uniform white sequence in [-amplitude, amplitude], mt19937_64-driven and
/// platform-deterministic for a given seed.
std::vector<double> uniform_noise(double amplitude, std::size_t n, std::uint64_t seed);

/// Closed-loop run of Fig-1: plant output (optionally quantized) plus noise is
/// subtracted from the reference; reset states jump to gamma*x at sampled zero
/// crossings of the error, before that sample's flow update. Feedforward adds
/// to the plant input. Throws on state divergence.
SimTrace simulate_closed_loop(const StateSpaceModel& plant, const ResetController& controller,
                              const std::vector<double>& reference,
                              const std::vector<double>& feedforward, const SimConfig& config);

/// Same arithmetic path with the jump rule disabled; the gamma = 1 reference
/// behaviour for the linear-degeneration checks.
SimTrace simulate_linear(const StateSpaceModel& plant, const ResetController& controller,
                         const std::vector<double>& reference,
                         const std::vector<double>& feedforward, const SimConfig& config);

/// Steady-state first-harmonic response of an open reset element driven by a
/// unit sinusoid at omega: the empirical describing function. The first half
/// of the requested cycles is discarded as transient; rejects runs whose
/// cycle-to-cycle harmonic drift exceeds 1%.
Complex first_harmonic(const ResetElement& element, double omega, int cycles);

}  // namespace resetctl
