#include "resetctl/lti.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace resetctl {

namespace {

void require_finite(const Matrix& m, const char* name) {
    if (!m.allFinite()) {
        throw std::invalid_argument(std::string(name) + " contains NaN/Inf entries");
    }
}

}  // namespace

StateSpaceModel::StateSpaceModel(Matrix a, Matrix b, Matrix c, Matrix d)
    : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)) {
    const auto n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("A must be square");
    if (B.rows() != n) throw std::invalid_argument("B row count must match state dimension");
    if (C.cols() != n) throw std::invalid_argument("C column count must match state dimension");
    if (D.rows() != C.rows() || D.cols() != B.cols())
        throw std::invalid_argument("D must be outputs x inputs");
    require_finite(A, "A");
    require_finite(B, "B");
    require_finite(C, "C");
    require_finite(D, "D");
}

StateSpaceModel StateSpaceModel::gain(double k) {
    StateSpaceModel s;
    s.D(0, 0) = k;
    return s;
}

RationalTF::RationalTF(std::vector<double> n, std::vector<double> d)
    : num(std::move(n)), den(std::move(d)) {
    if (num.empty()) num = {0.0};
    if (den.empty() || den.front() == 0.0)
        throw std::invalid_argument("denominator leading coefficient must be nonzero");
    for (double c : num)
        if (!std::isfinite(c)) throw std::invalid_argument("numerator coefficient not finite");
    for (double c : den)
        if (!std::isfinite(c)) throw std::invalid_argument("denominator coefficient not finite");
}

Complex RationalTF::eval(Complex s) const {
    auto horner = [&](const std::vector<double>& p) {
        Complex acc(0.0, 0.0);
        for (double c : p) acc = acc * s + c;
        return acc;
    };
    return horner(num) / horner(den);
}

RationalTF RationalTF::operator*(const RationalTF& other) const {
    auto conv = [](const std::vector<double>& a, const std::vector<double>& b) {
        std::vector<double> out(a.size() + b.size() - 1, 0.0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    return RationalTF(conv(num, other.num), conv(den, other.den));
}

FrequencyCurve::FrequencyCurve(std::vector<double> w, std::vector<Complex> v)
    : omega(std::move(w)), value(std::move(v)) {
    if (omega.size() != value.size())
        throw std::invalid_argument("omega/value length mismatch");
    double prev = 0.0;
    for (double x : omega) {
        if (!(x > prev))
            throw std::invalid_argument("omega must be strictly increasing and positive");
        prev = x;
    }
}

Matrix matrix_exp(const Matrix& m) {
    require_finite(m, "matrix_exp input");
    const int n = static_cast<int>(m.rows());
    if (m.cols() != n) throw std::invalid_argument("matrix_exp needs a square matrix");
    if (n == 0) return Matrix(0, 0);

    // Pade-13 coefficients (Higham 2005), scaling threshold theta_13.
    static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                               1187353796428800.0,  129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,       1323241920.0,
                               40840800.0,          960960.0,            16380.0,
                               182.0,               1.0};
    const double theta13 = 5.371920351148152;

    const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
    int squarings = 0;
    if (norm > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    }
    const Matrix a  = m / std::ldexp(1.0, squarings);
    const Matrix a2 = a * a;
    const Matrix a4 = a2 * a2;
    const Matrix a6 = a2 * a4;
    const Matrix id = Matrix::Identity(n, n);

    const Matrix u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                          b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
    const Matrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                     b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

    Matrix r = (v - u).partialPivLu().solve(v + u);
    for (int i = 0; i < squarings; ++i) r = r * r;
    return r;
}

StateSpaceModel tf_to_ss(const RationalTF& tf) {
    if (!tf.is_proper()) {
        throw std::invalid_argument(
            "improper transfer function (deg num " + std::to_string(tf.num_degree()) +
            " > deg den " + std::to_string(tf.den_degree()) +
            "): combine with low-pass factors until proper before realizing");
    }
    const int n = tf.den_degree();
    // Normalize to a monic denominator and pad the numerator to length n+1.
    const double a0 = tf.den.front();
    std::vector<double> den(n + 1), num(n + 1, 0.0);
    for (int i = 0; i <= n; ++i) den[i] = tf.den[i] / a0;
    const int shift = n - tf.num_degree();
    for (int i = 0; i <= tf.num_degree(); ++i) num[i + shift] = tf.num[i] / a0;

    const double d = num[0];
    if (n == 0) return StateSpaceModel::gain(d);

    Matrix A = Matrix::Zero(n, n);
    for (int i = 0; i < n; ++i) A(0, i) = -den[i + 1];
    for (int i = 1; i < n; ++i) A(i, i - 1) = 1.0;
    Matrix B = Matrix::Zero(n, 1);
    B(0, 0) = 1.0;
    Matrix C(1, n);
    for (int i = 0; i < n; ++i) C(0, i) = num[i + 1] - den[i + 1] * d;
    Matrix D(1, 1);
    D(0, 0) = d;
    return StateSpaceModel(std::move(A), std::move(B), std::move(C), std::move(D));
}

StateSpaceModel series(const StateSpaceModel& first, const StateSpaceModel& second) {
    if (first.outputs() != second.inputs()) {
        throw std::invalid_argument("series: output dimension " + std::to_string(first.outputs()) +
                                    " does not match input dimension " +
                                    std::to_string(second.inputs()));
    }
    const int n1 = first.states(), n2 = second.states();
    const int m = first.inputs(), p = second.outputs();

    Matrix A = Matrix::Zero(n1 + n2, n1 + n2);
    A.topLeftCorner(n1, n1) = first.A;
    A.bottomLeftCorner(n2, n1) = second.B * first.C;
    A.bottomRightCorner(n2, n2) = second.A;

    Matrix B = Matrix::Zero(n1 + n2, m);
    B.topRows(n1) = first.B;
    B.bottomRows(n2) = second.B * first.D;

    Matrix C = Matrix::Zero(p, n1 + n2);
    C.leftCols(n1) = second.D * first.C;
    C.rightCols(n2) = second.C;

    Matrix D = second.D * first.D;
    return StateSpaceModel(std::move(A), std::move(B), std::move(C), std::move(D));
}

Complex freq_response(const StateSpaceModel& sys, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("freq_response: omega must be positive");
    if (sys.inputs() != 1 || sys.outputs() != 1)
        throw std::invalid_argument("freq_response: SISO system expected");
    const int n = sys.states();
    if (n == 0) return Complex(sys.D(0, 0), 0.0);

    Eigen::MatrixXcd resolv = Complex(0.0, omega) * Eigen::MatrixXcd::Identity(n, n) -
                              sys.A.cast<Complex>();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(resolv);
    if (!lu.isInvertible()) {
        throw std::runtime_error("freq_response: singular resolvent at omega = " +
                                 std::to_string(omega) + " rad/s (undamped pole on jw axis)");
    }
    Eigen::VectorXcd x = lu.solve(sys.B.cast<Complex>());
    Complex y = (sys.C.cast<Complex>() * x)(0) + Complex(sys.D(0, 0), 0.0);
    return y;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw std::invalid_argument("log_grid: need 0 < lo < hi and points >= 2");
    std::vector<double> out(points);
    const double step = (std::log(hi) - std::log(lo)) / (points - 1);
    for (int i = 0; i < points; ++i) out[i] = std::exp(std::log(lo) + step * i);
    out.front() = lo;
    out.back() = hi;
    return out;
}

}  // namespace resetctl
