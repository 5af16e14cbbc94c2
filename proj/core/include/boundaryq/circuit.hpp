#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "boundaryq/pauli.hpp"

namespace boundaryq {

enum class GateKind : std::uint8_t { H, S, Sdg, X, RZ, RX, CNOT };

/// One gate from the fixed set {H, S, S†, X, RZ(a), RX(a), CNOT}.
/// RZ(a) = diag(e^{-ia/2}, e^{+ia/2}); RX(a) = exp(-i a/2 X).
struct Gate {
    GateKind kind;
    int q0;             // target, or control for CNOT
    int q1 = -1;        // CNOT target
    double angle = 0.0; // RZ/RX only

    static Gate h(int q);
    static Gate s(int q);
    static Gate sdg(int q);
    static Gate x(int q);
    static Gate rz(int q, double angle);
    static Gate rx(int q, double angle);
    static Gate cnot(int control, int target);

    bool operator==(const Gate& other) const;
};

const char* gate_name(GateKind kind);

/// Ordered gate list over n qubits plus an optional ancilla wire. Gates are
/// applied in list order; immutable once built apart from append.
class Circuit {
  public:
    explicit Circuit(int n, int ancilla_count = 0);

    int n() const { return n_; }
    int ancilla_count() const { return ancilla_count_; }
    int total_qubits() const { return n_ + ancilla_count_; }

    const std::vector<Gate>& gates() const { return gates_; }

    void append(const Gate& g); // validates qubit indices
    void append(const std::vector<Gate>& gs);

    /// Structural equality: same total wire count and identical gate list
    /// (angles compared bit-exactly).
    bool operator==(const Circuit& other) const;

  private:
    int n_;
    int ancilla_count_;
    std::vector<Gate> gates_;
};

/// In-place action of one gate on a 2^k amplitude array (dim = 2^k).
void apply_gate(const Gate& g, complexd* amps, std::uint64_t dim);

/// Same, restricted to the subspace where `control` is 1 (used to realize
/// controlled-U for the Hadamard test). CNOT becomes a Toffoli-style update.
void apply_gate_controlled(const Gate& g, int control, complexd* amps, std::uint64_t dim);

/// Gate sequence for exp(+i P angle/2) where P is a phase-(+1) Pauli word of
/// any support size >= 1: basis changes (H for X, RX(pi/2) for Y) into the
/// Z basis, a CNOT parity ladder onto the lowest support qubit, a central
/// RZ(-angle), and the uncompute.
std::vector<Gate> compile_pauli_exponential(const PauliString& p, double angle);

/// Strict two-qubit form of the above: throws std::invalid_argument unless
/// the word has exactly two non-identity factors. Always 5-7 gates,
/// independent of n (7 for the cascade's YX rotations).
std::vector<Gate> compile_pauli_rotation(const PauliString& p, double angle);

/// Exact gate-by-gate expansion of the circuit unitary (subject to the
/// dense limit).
Eigen::MatrixXcd unitary_of(const Circuit& c);

/// QASM-like text: header "qubits <n+ancilla>", then one gate per line
/// ("h 0", "cx 1 0", "rz 0 <angle to 17 digits>"). Round-trips bit-exactly
/// through parse_text; '#' lines are comments.
std::string emit_text(const Circuit& c);
Circuit parse_text(std::string_view text);

struct CircuitCounts {
    int depth = 0;                   // greedy layering on disjoint qubits
    int two_qubit_rotations = 0;     // compiled Pauli-rotation blocks
    int total_gates = 0;
};

CircuitCounts depth_and_counts(const Circuit& c);

} // namespace boundaryq
