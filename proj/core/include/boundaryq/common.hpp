#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace boundaryq {

using complexd = std::complex<double>;

/// Thrown when an operation would materialize a matrix or statevector
/// larger than the configured dense limit.
class resource_limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Largest qubit count for which dense/sparse 2^n-dimensional objects may be
/// built. Defaults to 14; override with the BOUNDARYQ_DENSE_LIMIT
/// environment variable.
int dense_qubit_limit();

/// Throws resource_limit_error if `qubits` exceeds dense_qubit_limit().
void check_dense_limit(int qubits, const std::string& what);

/// Formats a double with 17 significant digits so that parsing recovers the
/// exact bit pattern.
std::string format_double(double value);

} // namespace boundaryq
