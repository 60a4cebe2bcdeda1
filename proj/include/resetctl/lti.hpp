#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace resetctl {

using Matrix  = Eigen::MatrixXd;
using Vector  = Eigen::VectorXd;
using Complex = std::complex<double>;

/// Continuous-time LTI system x' = Ax + Bu, y = Cx + Du.
/// A 0-state system (n = 0) is a pure gain D.
struct StateSpaceModel {
    Matrix A;
    Matrix B;
    Matrix C;
    Matrix D;

    StateSpaceModel() : A(0, 0), B(0, 1), C(1, 0), D(Matrix::Zero(1, 1)) {}
    StateSpaceModel(Matrix a, Matrix b, Matrix c, Matrix d);

    int states() const { return static_cast<int>(A.rows()); }
    int inputs() const { return static_cast<int>(B.cols()); }
    int outputs() const { return static_cast<int>(C.rows()); }

    static StateSpaceModel gain(double k);
};

/// Rational transfer function, coefficients in descending powers of s.
/// Improper functions (deg num > deg den) are representable but cannot be
/// realized; is_proper() tells the caller which case it holds.
struct RationalTF {
    std::vector<double> num;
    std::vector<double> den;

    RationalTF() : num{0.0}, den{1.0} {}
    RationalTF(std::vector<double> n, std::vector<double> d);

    int num_degree() const { return static_cast<int>(num.size()) - 1; }
    int den_degree() const { return static_cast<int>(den.size()) - 1; }
    bool is_proper() const { return num_degree() <= den_degree(); }

    Complex eval(Complex s) const;
    Complex eval_jw(double omega) const { return eval(Complex(0.0, omega)); }

    RationalTF operator*(const RationalTF& other) const;

    static RationalTF constant(double k) { return RationalTF({k}, {1.0}); }
};

/// Ordered frequency-domain samples (omega in rad/s, strictly increasing).
struct FrequencyCurve {
    std::vector<double> omega;
    std::vector<Complex> value;

    FrequencyCurve() = default;
    FrequencyCurve(std::vector<double> w, std::vector<Complex> v);

    std::size_t size() const { return omega.size(); }
};

/// e^M by scaling-and-squaring with a degree-13 Pade approximant.
Matrix matrix_exp(const Matrix& m);

/// Controllable canonical realization of a proper transfer function.
/// Throws std::invalid_argument for improper input (absorb the excess zeros
/// into another factor before realizing).
StateSpaceModel tf_to_ss(const RationalTF& tf);

/// Series composition: signal flows first -> second.
StateSpaceModel series(const StateSpaceModel& first, const StateSpaceModel& second);

/// C (jwI - A)^-1 B + D at omega > 0. Throws on a singular resolvent.
Complex freq_response(const StateSpaceModel& sys, double omega);

std::vector<double> log_grid(double lo, double hi, int points);

}  // namespace resetctl
