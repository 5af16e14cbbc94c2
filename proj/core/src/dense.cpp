#include "boundaryq/dense.hpp"

#include <cmath>

namespace boundaryq::dense {

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << complexd(0, 0), complexd(0, -1), complexd(0, 1), complexd(0, 0);
    return m;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

Eigen::Matrix2cd identity2() {
    return Eigen::Matrix2cd::Identity();
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("expm requires a square matrix");
    }
    // Scale so the 1-norm is below 1/4, run the Taylor series to machine
    // precision, then undo the scaling by repeated squaring.
    const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    double scaled_norm = norm;
    while (scaled_norm > 0.25) {
        scaled_norm *= 0.5;
        ++squarings;
    }
    const Eigen::MatrixXcd scaled = a / std::pow(2.0, squarings);

    const Eigen::Index dim = a.rows();
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(dim, dim);
    for (int k = 1; k <= 40; ++k) {
        term = (term * scaled) / static_cast<double>(k);
        result += term;
        if (term.cwiseAbs().maxCoeff() < 1e-18) {
            break;
        }
    }
    for (int s = 0; s < squarings; ++s) {
        result = result * result;
    }
    return result;
}

double frobenius_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return (a - b).norm();
}

double distance_from_identity(const Eigen::MatrixXcd& a) {
    return (a - Eigen::MatrixXcd::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff();
}

} // namespace boundaryq::dense
