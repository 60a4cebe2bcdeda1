#include "resetctl/sim.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace resetctl {

std::size_t SimConfig::samples() const {
    if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be positive");
    if (!(duration >= dt)) throw std::invalid_argument("SimConfig: duration must be >= dt");
    return static_cast<std::size_t>(std::llround(duration / dt));
}

DiscreteSS discretize(const StateSpaceModel& sys, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("discretize: dt must be positive");
    const int n = sys.states();
    const int m = sys.inputs();
    if (n == 0) return DiscreteSS{Matrix(0, 0), Matrix(0, m)};
    Matrix aug = Matrix::Zero(n + m, n + m);
    aug.topLeftCorner(n, n) = sys.A * dt;
    aug.topRightCorner(n, m) = sys.B * dt;
    const Matrix e = matrix_exp(aug);
    return DiscreteSS{e.topLeftCorner(n, n), e.topRightCorner(n, m)};
}

std::vector<double> uniform_noise(double amplitude, std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<double> out(n);
    for (auto& v : out) {
        // manual [0,1) mapping keeps the sequence identical across platforms
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        v = amplitude * (2.0 * u - 1.0);
    }
    return out;
}

namespace {

SimTrace run_loop(const StateSpaceModel& plant, const ResetController& controller,
                  const std::vector<double>& reference, const std::vector<double>& feedforward,
                  const SimConfig& config, bool resets_enabled) {
    const std::size_t n_samples = config.samples();
    if (reference.size() != n_samples)
        throw std::invalid_argument("simulate: reference length " +
                                    std::to_string(reference.size()) + " != sample count " +
                                    std::to_string(n_samples));
    if (!feedforward.empty() && feedforward.size() != n_samples)
        throw std::invalid_argument("simulate: feedforward length mismatch");
    if (!config.noise.empty() && config.noise.size() != n_samples)
        throw std::invalid_argument("simulate: noise length mismatch");
    if (plant.D(0, 0) != 0.0)
        throw std::invalid_argument("simulate: plant must be strictly proper");

    const StateSpaceModel& rss = controller.resetting.base;
    const StateSpaceModel& nss = controller.linear;
    const double gamma = controller.resetting.gamma;
    const double kp = controller.gain;

    const DiscreteSS rd = discretize(rss, config.dt);
    const DiscreteSS nd = discretize(nss, config.dt);
    const DiscreteSS pd = discretize(plant, config.dt);

    const int n_r = rss.states(), n_n = nss.states(), n_p = plant.states();
    Vector xr = Vector::Zero(n_r), xn = Vector::Zero(n_n), xp = Vector::Zero(n_p);

    SimTrace tr;
    tr.t.resize(n_samples);
    tr.r = reference;
    tr.e.resize(n_samples);
    tr.u.resize(n_samples);
    tr.y.resize(n_samples);
    if (n_r > 0) tr.xr.resize(n_samples);

    double e_prev = 0.0;
    for (std::size_t k = 0; k < n_samples; ++k) {
        const double y = n_p ? (plant.C * xp)(0) : 0.0;
        double y_meas = y;
        if (config.quantizer > 0.0) y_meas = config.quantizer * std::round(y / config.quantizer);
        const double noise = config.noise.empty() ? 0.0 : config.noise[k];
        const double e = reference[k] - y_meas - noise;

        if (resets_enabled && (e == 0.0 || (k > 0 && e_prev * e < 0.0))) {
            xr *= gamma;
            ++tr.resets;
        }

        const double u_r = (n_r ? (rss.C * xr)(0) : 0.0) + rss.D(0, 0) * e;
        const double u = kp * ((n_n ? (nss.C * xn)(0) : 0.0) + nss.D(0, 0) * u_r);
        const double u_total = u + (feedforward.empty() ? 0.0 : feedforward[k]);

        tr.t[k] = static_cast<double>(k) * config.dt;
        tr.e[k] = e;
        tr.u[k] = u;
        tr.y[k] = y;
        if (n_r > 0) tr.xr[k] = xr(0);

        if (n_r) xr = rd.A * xr + rd.B * e;
        if (n_n) xn = nd.A * xn + nd.B * u_r;
        if (n_p) xp = pd.A * xp + pd.B * u_total;

        if ((n_p && !xp.allFinite()) || (n_n && !xn.allFinite()) || (n_r && !xr.allFinite())) {
            throw std::runtime_error("simulate: state diverged at t = " +
                                     std::to_string(k * config.dt) +
                                     " s (unstable closed loop?)");
        }
        e_prev = e;
    }
    return tr;
}

}  // namespace

SimTrace simulate_closed_loop(const StateSpaceModel& plant, const ResetController& controller,
                              const std::vector<double>& reference,
                              const std::vector<double>& feedforward, const SimConfig& config) {
    return run_loop(plant, controller, reference, feedforward, config, true);
}

SimTrace simulate_linear(const StateSpaceModel& plant, const ResetController& controller,
                         const std::vector<double>& reference,
                         const std::vector<double>& feedforward, const SimConfig& config) {
    return run_loop(plant, controller, reference, feedforward, config, false);
}

Complex first_harmonic(const ResetElement& element, double omega, int cycles) {
    if (!(omega > 0.0)) throw std::invalid_argument("first_harmonic: omega must be positive");
    if (cycles < 10) throw std::invalid_argument("first_harmonic: need at least 10 cycles");

    constexpr int samples_per_cycle = 4096;
    const double period = 2.0 * std::numbers::pi / omega;
    const double dt = period / samples_per_cycle;

    const StateSpaceModel& s = element.base;
    const int n = s.states();
    const DiscreteSS d = discretize(s, dt);
    Vector x = Vector::Zero(n);

    const int discard = cycles / 2;
    const int measured = cycles - discard;
    const std::size_t total = static_cast<std::size_t>(cycles) * samples_per_cycle;

    std::vector<double> y(static_cast<std::size_t>(measured) * samples_per_cycle);
    double e_prev = 0.0;
    for (std::size_t k = 0; k < total; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double e = std::sin(omega * t);
        if (e == 0.0 || (k > 0 && e_prev * e < 0.0)) x *= element.gamma;
        const double out = (n ? (s.C * x)(0) : 0.0) + s.D(0, 0) * e;
        const std::size_t k0 = static_cast<std::size_t>(discard) * samples_per_cycle;
        if (k >= k0) y[k - k0] = out;
        if (n) x = d.A * x + d.B * e;
        e_prev = e;
    }

    // per-cycle first harmonics: settling check plus the averaged estimate
    auto cycle_harmonic = [&](int c) {
        double re = 0.0, im = 0.0;
        for (int i = 0; i < samples_per_cycle; ++i) {
            const std::size_t k = static_cast<std::size_t>(c) * samples_per_cycle + i;
            const double t = static_cast<double>((discard + c) * samples_per_cycle + i) * dt;
            re += y[k] * std::sin(omega * t);
            im += y[k] * std::cos(omega * t);
        }
        const double scale = 2.0 / samples_per_cycle;
        return Complex(re * scale, im * scale);
    };

    Complex mean(0.0, 0.0);
    std::vector<Complex> per_cycle(measured);
    for (int c = 0; c < measured; ++c) {
        per_cycle[c] = cycle_harmonic(c);
        mean += per_cycle[c];
    }
    mean /= static_cast<double>(measured);

    const int tail = std::min(measured, 4);
    for (int c = measured - tail + 1; c < measured; ++c) {
        const double drift = std::abs(per_cycle[c] - per_cycle[c - 1]) / std::abs(mean);
        if (drift > 0.01)
            throw std::runtime_error("first_harmonic: response not settled at omega = " +
                                     std::to_string(omega) + " (cycle drift " +
                                     std::to_string(drift * 100.0) + "%); increase cycles");
    }
    return mean;
}

}  // namespace resetctl
