#include "resetctl/loopshape.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace resetctl {

namespace {

constexpr double kPi = std::numbers::pi;

/// Multiply factors into one rational function; append a repair LPF a decade
/// above wl whenever the product is improper, then realize.
StateSpaceModel compose_factors(std::vector<RationalTF>& factors, double wl) {
    RationalTF prod = RationalTF::constant(1.0);
    for (const auto& f : factors) prod = prod * f;
    while (!prod.is_proper()) {
        const RationalTF repair({1.0}, {1.0 / (10.0 * wl), 1.0});
        factors.push_back(repair);
        prod = prod * repair;
        wl *= 10.0;
    }
    return tf_to_ss(prod);
}

double loop_magnitude(const OpenLoop& ol, double w) { return std::abs(open_loop_df(ol, w)); }

}  // namespace

void DesignSpec::validate() const {
    if (!(wc > 0.0)) throw std::invalid_argument("DesignSpec: wc must be positive");
    if (!(alpha > 0.0 && alpha <= 1.5))
        throw std::invalid_argument("DesignSpec: alpha must lie in (0, 1.5]");
    if (!(ratio_wi > 0.0 && ratio_wd > 0.0 && ratio_wl > 0.0))
        throw std::invalid_argument("DesignSpec: frequency ratios must be positive");
    if (!(ratio_wd < ratio_wl))
        throw std::invalid_argument("DesignSpec: wd must lie below wl");
}

Complex open_loop_df(const OpenLoop& ol, double omega) {
    const ResetController& c = ol.controller;
    Complex l = df(c.resetting, omega);
    l *= freq_response(c.linear, omega);
    l *= c.gain;
    l *= freq_response(ol.plant, omega);
    return l;
}

MarginInfo phase_margin(const OpenLoop& ol, double search_lo, double search_hi) {
    constexpr int kScanPoints = 600;
    const auto grid = log_grid(search_lo, search_hi, kScanPoints);

    std::vector<double> crossings;
    double prev = loop_magnitude(ol, grid[0]) - 1.0;
    for (int i = 1; i < kScanPoints; ++i) {
        const double cur = loop_magnitude(ol, grid[i]) - 1.0;
        if (prev == 0.0) crossings.push_back(grid[i - 1]);
        else if (prev * cur < 0.0) {
            double lo = grid[i - 1], hi = grid[i];
            while (hi / lo > 1.0 + 1e-6) {
                const double mid = std::sqrt(lo * hi);
                if ((loop_magnitude(ol, mid) - 1.0) * prev > 0.0) lo = mid;
                else hi = mid;
            }
            crossings.push_back(std::sqrt(lo * hi));
        }
        prev = cur;
    }

    if (crossings.empty())
        throw std::runtime_error("phase_margin: |L| never crosses unity in the search window");
    if (crossings.size() > 1) {
        std::string where;
        for (double w : crossings) where += " " + std::to_string(w / (2.0 * kPi)) + " Hz";
        throw std::runtime_error("phase_margin: multiple unity crossings:" + where);
    }

    MarginInfo m;
    m.crossover_rad_s = crossings.front();
    const Complex l = open_loop_df(ol, m.crossover_rad_s);
    m.phase_margin_deg = 180.0 + std::arg(l) * 180.0 / kPi;
    return m;
}

double tune_kp(const OpenLoop& ol, double wc) {
    OpenLoop unit = ol;
    unit.controller.gain = 1.0;
    const double mag = loop_magnitude(unit, wc);
    if (!(mag > 0.0)) throw std::runtime_error("tune_kp: zero loop magnitude at wc");
    return 1.0 / mag;
}

ResetController pid_series(double kp, double wi, double wd, double wt, double wl) {
    if (!(wi > 0.0 && wd > 0.0 && wt > 0.0 && wl > 0.0))
        throw std::invalid_argument("pid_series: all corner frequencies must be positive");
    if (!(wt > wd))
        throw std::invalid_argument("pid_series: taming pole wt must lie above the lead zero wd");

    std::vector<RationalTF> factors = {
        RationalTF({1.0, wi}, {1.0, 0.0}),            // lag (1 + wi/s)
        RationalTF({1.0 / wd, 1.0}, {1.0 / wt, 1.0}),  // tamed lead
        RationalTF({1.0}, {1.0 / wl, 1.0}),            // LPF
    };
    ResetController c;
    c.resetting = ResetElement(StateSpaceModel::gain(1.0), 1.0);
    c.linear = compose_factors(factors, wl);
    c.linear_factors = std::move(factors);
    c.gain = kp;
    return c;
}

ResetController design_linear_pid(const DesignSpec& spec, const StateSpaceModel& plant,
                                  DesignReport* report) {
    spec.validate();
    const double wc = spec.wc;

    auto pm_for_ratio = [&](double a) {
        ResetController c = pid_series(1.0, spec.wi(), wc / a, wc * a, spec.wl());
        OpenLoop ol{c, plant};
        c.gain = tune_kp(ol, wc);
        ol.controller = c;
        return phase_margin(ol).phase_margin_deg;
    };

    double lo = 1.02, hi = 20.0;
    if (pm_for_ratio(lo) > spec.phase_margin_deg || pm_for_ratio(hi) < spec.phase_margin_deg)
        throw std::runtime_error("design_linear_pid: margin target not bracketed by lead ratios");
    for (int it = 0; it < 60 && (hi - lo) > 1e-9 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (pm_for_ratio(mid) < spec.phase_margin_deg ? lo : hi) = mid;
    }
    const double a = 0.5 * (lo + hi);

    ResetController c = pid_series(1.0, spec.wi(), wc / a, wc * a, spec.wl());
    OpenLoop ol{c, plant};
    c.gain = tune_kp(ol, wc);
    ol.controller = c;
    if (report) {
        report->gamma = 1.0;
        report->kp = c.gain;
        report->margin = phase_margin(ol);
        report->wc_target = wc;
    }
    return c;
}

namespace {

/// Controller A's structure for a given gamma, kp = 1.
ResetController reset_structure(const DesignSpec& spec, double gamma) {
    std::vector<RationalTF> factors = {
        RationalTF({1.0, spec.wi()}, {1.0, 0.0}),       // lag
        RationalTF({1.0 / spec.wd(), 1.0}, {1.0}),      // lead zero (improper alone)
        RationalTF({1.0}, {1.0 / spec.wl(), 1.0}),      // LPF
    };
    ResetController c;
    c.resetting = reset_taming_pole(spec.alpha * spec.wd(), gamma);
    c.linear = compose_factors(factors, spec.wl());
    c.linear_factors = std::move(factors);
    c.gain = 1.0;
    return c;
}

double bisect_gamma(const DesignSpec& spec, double pm_target,
                    const std::function<double(double)>& pm_of_gamma) {
    double lo = -0.999, hi = 1.0;  // pm decreases with gamma for these loops
    const double pm_lo = pm_of_gamma(lo), pm_hi = pm_of_gamma(hi);
    if ((pm_lo - pm_target) * (pm_hi - pm_target) > 0.0)
        throw std::runtime_error("reset design: margin target " + std::to_string(pm_target) +
                                 " deg not reachable over gamma in [-1, 1] (got " +
                                 std::to_string(pm_lo) + " .. " + std::to_string(pm_hi) + ")");
    for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double pm = pm_of_gamma(mid);
        if (std::abs(pm - pm_target) < 0.1 && (hi - lo) < 1e-4) return mid;
        if ((pm - pm_target) * (pm_lo - pm_target) > 0.0) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ResetController reset_pid_a(const DesignSpec& spec, const StateSpaceModel& plant,
                            DesignReport* report) {
    spec.validate();

    auto build = [&](double gamma) {
        ResetController c = reset_structure(spec, gamma);
        OpenLoop ol{c, plant};
        c.gain = tune_kp(ol, spec.wc);
        return c;
    };

    double gamma = spec.gamma;
    if (std::isnan(gamma)) {
        gamma = bisect_gamma(spec, spec.phase_margin_deg, [&](double g) {
            OpenLoop ol{build(g), plant};
            return phase_margin(ol).phase_margin_deg;
        });
    }

    ResetController c = build(gamma);
    if (report) {
        OpenLoop ol{c, plant};
        report->gamma = gamma;
        report->kp = c.gain;
        report->margin = phase_margin(ol);
        report->wc_target = spec.wc;
    }
    return c;
}

ResetController reset_pid_b(const DesignSpec& spec, const StateSpaceModel& plant,
                            const ResetController& reference_pid, double match_freq,
                            DesignReport* report) {
    spec.validate();
    if (match_freq <= 0.0) match_freq = 10.0 * spec.wc;
    if (match_freq < 2.0 * kPi * 0.1 || match_freq > 2.0 * kPi * 50000.0)
        throw std::invalid_argument("reset_pid_b: gain match frequency outside evaluated range");

    const OpenLoop ref_ol{reference_pid, plant};
    const double target = std::abs(open_loop_df(ref_ol, match_freq));

    auto build = [&](double gamma) {
        ResetController c = reset_structure(spec, gamma);
        OpenLoop ol{c, plant};
        const double mag = loop_magnitude(ol, match_freq);
        if (!(mag > 0.0)) throw std::runtime_error("reset_pid_b: zero magnitude at match frequency");
        c.gain = target / mag;
        return c;
    };

    double gamma = spec.gamma;
    if (std::isnan(gamma)) {
        gamma = bisect_gamma(spec, spec.phase_margin_deg, [&](double g) {
            OpenLoop ol{build(g), plant};
            return phase_margin(ol).phase_margin_deg;
        });
    }

    ResetController c = build(gamma);
    OpenLoop ol{c, plant};
    const MarginInfo m = phase_margin(ol);
    if (!(m.crossover_rad_s > spec.wc))
        throw std::runtime_error("reset_pid_b: crossover did not increase past wc");
    if (report) {
        report->gamma = gamma;
        report->kp = c.gain;
        report->margin = m;
        report->wc_target = spec.wc;
    }
    return c;
}

}  // namespace resetctl
