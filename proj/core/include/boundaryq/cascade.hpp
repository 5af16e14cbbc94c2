#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "boundaryq/circuit.hpp"
#include "boundaryq/pauli.hpp"
#include "boundaryq/sparse.hpp"

namespace boundaryq {

struct RotationStep {
    int index;    // i of R_i, generator Y_i X_{i-1}
    double theta; // atan2(sqrt(n-i), 1)
};

/// The rotation sequence R = R_1 ... R_{n-1} (R_{n-1} applied first, i.e.
/// rightmost in the matrix product) that maps B onto a single Pauli:
/// R B R^dagger = sqrt(n) * Q_0. Steps are stored in application order
/// i = n-1, ..., 1; empty for n = 1.
class RotationCascade {
  public:
    explicit RotationCascade(int n, std::vector<RotationStep> steps);

    int n() const { return n_; }
    const std::vector<RotationStep>& steps() const { return steps_; }

    /// Lines "<i> <theta to 17 digits>" in application order.
    std::string to_text() const;
    static RotationCascade from_text(std::string_view text, int n);

  private:
    int n_;
    std::vector<RotationStep> steps_;
};

RotationCascade build_cascade(int n);

/// The single Pauli the cascade maps B onto: sigma_z^(n-1) (x) sigma_x,
/// i.e. Q_0 (the paper writes it X_0; the z-tail is load-bearing for n >= 2).
PauliString cascade_target_pauli(int n);

/// R_i = exp(+i Y_i X_{i-1} theta/2) as a gate block.
std::vector<Gate> step_gates(const RotationStep& step);

/// Gate sequence realizing R (steps in application order).
std::vector<Gate> cascade_gates(const RotationCascade& cascade);
/// Gate sequence realizing R^dagger.
std::vector<Gate> inverse_cascade_gates(const RotationCascade& cascade);

/// Dense R (for verification); uses the sparse structure of each R_i, so it
/// is O(n 4^n) rather than a chain of dense products.
Eigen::MatrixXcd cascade_unitary(const RotationCascade& cascade);

/// Frobenius residual || R B R^dagger - sqrt(n) Q_0 ||_F, densely computed.
double conjugate_check(int n);

/// Same residual with step `which` replaced by theta + delta; fault
/// injection for the verification harness.
double conjugate_check_perturbed(int n, int which, double delta);

struct ScaledCircuit {
    Circuit circuit;
    double scale;
};

/// Circuit for the unitary R^dagger Q_0 R plus the classical factor
/// sqrt(n): scale * unitary_of(circuit) = B. The center is one X gate on
/// qubit 0 and S.S (= Z) on each remaining qubit; 2(n-1) two-qubit
/// rotations in total.
ScaledCircuit analytic_boundary_circuit(int n);

/// Circuit for e^{-iBt} = R^dagger e^{-i sqrt(n) Q_0 t} R. The central
/// rotation angle is classically reduced: RZ(2 sqrt(n) t mod 4pi); circuit
/// size is independent of t.
Circuit evolution_circuit(int n, double t);

/// Central RZ angle used by evolution_circuit (2 sqrt(n) t mod 4pi).
double evolution_central_angle(int n, double t);

/// P_{k-1} B P_k; equals restricted_boundary(k, n) exactly.
SparseOperator restricted_from_hermitian(int k, int n);

} // namespace boundaryq
