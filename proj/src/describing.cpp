#include "resetctl/describing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace resetctl {

Matrix theta_d(const ResetElement& element, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("theta_d: omega must be positive");
    const int n = element.reset_states();
    if (n == 0) return Matrix(0, 0);

    const Matrix& a = element.base.A;
    const Matrix id = Matrix::Identity(n, n);
    const double g = element.gamma;

    const Matrix lambda = omega * omega * id + a * a;
    Eigen::FullPivLU<Matrix> lam_lu(lambda);
    if (!lam_lu.isInvertible())
        throw std::runtime_error("theta_d: Lambda(w) singular at omega = " + std::to_string(omega));
    const Matrix lambda_inv = lam_lu.inverse();

    const Matrix e = matrix_exp((std::numbers::pi / omega) * a);
    const Matrix delta = id + e;
    const Matrix delta_d = id + g * e;
    Eigen::FullPivLU<Matrix> dd_lu(delta_d);
    if (!dd_lu.isInvertible())
        throw std::runtime_error("theta_d: Delta_D(w) singular at omega = " + std::to_string(omega) +
                                 ", gamma = " + std::to_string(g));

    const Matrix gamma_d = dd_lu.solve(g * delta * lambda_inv);
    return -(2.0 * omega * omega / std::numbers::pi) * delta * (gamma_d - lambda_inv);
}

Complex df(const ResetElement& element, double omega) {
    const int n = element.reset_states();
    const StateSpaceModel& s = element.base;
    if (n == 0) return Complex(s.D(0, 0), 0.0);

    const Matrix th = theta_d(element, omega);
    Eigen::MatrixXcd resolv =
        Complex(0.0, omega) * Eigen::MatrixXcd::Identity(n, n) - s.A.cast<Complex>();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(resolv);
    if (!lu.isInvertible())
        throw std::runtime_error("df: singular resolvent at omega = " + std::to_string(omega));

    Eigen::MatrixXcd correction =
        Eigen::MatrixXcd::Identity(n, n) + Complex(0.0, 1.0) * th.cast<Complex>();
    Eigen::MatrixXcd x = lu.solve(s.B.cast<Complex>());
    Complex y = (s.C.cast<Complex>() * correction * x)(0) + Complex(s.D(0, 0), 0.0);
    return y;
}

FrequencyCurve df_curve(const ResetElement& element, const std::vector<double>& omega_grid) {
    std::vector<Complex> vals;
    vals.reserve(omega_grid.size());
    for (double w : omega_grid) vals.push_back(df(element, w));
    return FrequencyCurve(omega_grid, std::move(vals));
}

double cutoff_ratio_beta(double gamma) {
    if (!(gamma >= -1.0 && gamma <= 1.0))
        throw std::invalid_argument("cutoff_ratio_beta: gamma must lie in [-1, 1]");
    if (gamma == 1.0) return 1.0;  // linear lag: -3 dB at the corner by definition

    const double wr = 1.0;  // beta is scale-free in the corner frequency
    const ResetElement el = gfore(wr, gamma);
    const double target = 1.0 / std::sqrt(2.0);
    auto above = [&](double w) { return std::abs(df(el, w)) > target; };

    double lo = wr / 100.0, hi = 100.0 * wr;
    if (!above(lo) || above(hi)) {
        throw std::runtime_error(
            "cutoff_ratio_beta: -3 dB crossing not bracketed in [wr/100, 100 wr] for gamma = " +
            std::to_string(gamma));
    }
    while (hi / lo > 1.0 + 1e-6) {
        const double mid = std::sqrt(lo * hi);
        (above(mid) ? lo : hi) = mid;
    }
    return std::sqrt(lo * hi) / wr;
}

}  // namespace resetctl
