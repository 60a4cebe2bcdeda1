#pragma once

#include <limits>

#include "resetctl/describing.hpp"
#include "resetctl/reset_element.hpp"

namespace resetctl {

/// Target crossover, margin and tuning ratios for the series designs.
/// Defaults follow the paper-stage tuning: wI = wc/10, wd = wc/5, wl = 7 wc,
/// alpha = 0.7, 45 deg phase margin.
struct DesignSpec {
    double wc = 2.0 * 3.14159265358979323846 * 150.0;  // rad/s
    double phase_margin_deg = 45.0;
    /// Reset factor; NaN requests a bisection solve against the margin target.
    double gamma = std::numeric_limits<double>::quiet_NaN();
    double alpha = 0.7;
    double ratio_wi = 0.1;
    double ratio_wd = 0.2;
    double ratio_wl = 7.0;

    void validate() const;
    double wi() const { return ratio_wi * wc; }
    double wd() const { return ratio_wd * wc; }
    double wl() const { return ratio_wl * wc; }
};

struct OpenLoop {
    ResetController controller;
    StateSpaceModel plant;
};

struct MarginInfo {
    double phase_margin_deg = 0.0;
    double crossover_rad_s = 0.0;
};

struct DesignReport {
    double gamma = 1.0;
    double kp = 1.0;
    MarginInfo margin;
    double wc_target = 0.0;
};

/// Open-loop describing function df(Sigma_r) * G_nr * kp * G_plant.
Complex open_loop_df(const OpenLoop& ol, double omega);

/// Unity-gain crossover and 180 + phase there, searched on [lo, hi]. Exactly
/// one crossing is required; zero or several is an error.
MarginInfo phase_margin(const OpenLoop& ol, double search_lo = 2.0 * 3.14159265358979323846 * 0.1,
                        double search_hi = 2.0 * 3.14159265358979323846 * 50000.0);

/// Gain making |open-loop DF| = 1 at wc, i.e. 1/|L(jwc)| with kp = 1.
double tune_kp(const OpenLoop& ol, double wc);

/// Linear series PID per the four-term product
///   kp (1 + wi/s) (s/wd + 1)/(s/wt + 1) (1/(s/wl + 1)),  wt > wd.
ResetController pid_series(double kp, double wi, double wd, double wt, double wl);

/// PM-matched linear comparator: wd, wt placed symmetrically about wc and the
/// ratio solved so the loop meets the spec margin; kp normalized at wc.
ResetController design_linear_pid(const DesignSpec& spec, const StateSpaceModel& plant,
                                  DesignReport* report = nullptr);

/// Reset PID controller A: reset taming pole at alpha*wd in series with
/// kp (1 + wI/s)(1 + s/wd)(1/(s/wl + 1)); gamma from the spec or bisected for
/// the margin target, kp set for unity DF gain at wc.
ResetController reset_pid_a(const DesignSpec& spec, const StateSpaceModel& plant,
                            DesignReport* report = nullptr);

/// Reset PID controller B: controller A's structure with kp scaled so the
/// open-loop DF magnitude matches the reference PID's at match_freq (default
/// 10x the reference design crossover); gamma re-solved so the margin target
/// still holds at the raised crossover.
ResetController reset_pid_b(const DesignSpec& spec, const StateSpaceModel& plant,
                            const ResetController& reference_pid, double match_freq = 0.0,
                            DesignReport* report = nullptr);

}  // namespace resetctl
