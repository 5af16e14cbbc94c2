#pragma once

#include <Eigen/Dense>

#include "boundaryq/common.hpp"

namespace boundaryq::dense {

Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();
Eigen::Matrix2cd identity2();

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Matrix exponential by scaling-and-squaring with a Taylor series on the
/// scaled matrix. Generic (no structure assumptions), so it serves as an
/// independent oracle for circuit-built e^{-iBt}.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

double frobenius_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

/// Max |entry| distance from the identity; convenience for unitarity checks.
double distance_from_identity(const Eigen::MatrixXcd& a);

} // namespace boundaryq::dense
