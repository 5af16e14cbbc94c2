#pragma once

#include <cstdint>
#include <vector>

#include "boundaryq/circuit.hpp"
#include "boundaryq/pauli.hpp"

namespace boundaryq {

/// Dense 2^n statevector. Values are immutable from the outside; run()
/// returns a fresh vector.
class StateVector {
  public:
    /// |0...0>
    explicit StateVector(int n);

    static StateVector zero_state(int n);
    static StateVector uniform_superposition(int n);
    static StateVector haar_random(int n, std::uint64_t seed);
    static StateVector from_amplitudes(int n, std::vector<complexd> amplitudes);

    int n() const { return n_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_; }
    const std::vector<complexd>& amplitudes() const { return amps_; }
    double norm() const;

  private:
    int n_;
    std::vector<complexd> amps_;
    friend StateVector run(const Circuit&, const StateVector&);
};

/// Shot budget and seed for sampled estimates. `exact` selects the
/// infinite-shot mode: the estimator returns the exact expectation with
/// zero standard error and ignores shots/seed.
struct ShotConfig {
    std::uint64_t shots = 1;
    std::uint64_t seed = 0;
    bool exact = false;

    static ShotConfig with_shots(std::uint64_t shots, std::uint64_t seed);
    static ShotConfig exact_mode();
};

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t shots = 0; // 0 in exact mode
};

/// Gate-by-gate evolution. Requires state.n() == c.total_qubits().
StateVector run(const Circuit& c, const StateVector& input);

/// Exact <psi|Op|psi> by per-term Pauli action (no matrices materialized).
complexd expectation(const StateVector& state, const PauliString& p);
complexd expectation(const StateVector& state, const OperatorSum& op);

/// Measures the Pauli word p (phase must be +1): rotates its support into
/// the Z basis, samples N bitstrings from |amplitudes|^2, and returns the
/// mean of the +-1 parity eigenvalues with the sample standard error.
/// Deterministic under cfg.seed; exact mode returns <p> directly.
Estimate sample_pauli(const StateVector& state, const PauliString& p, const ShotConfig& cfg);

enum class HadamardPart { Real, Imag };

/// Standard ancilla Hadamard test for Re or Im <psi|U|psi> where U is the
/// circuit c: one ancilla wire is added internally and every gate of c is
/// applied controlled on it. Shot outcomes are the ancilla's +-1 values.
Estimate hadamard_test(const Circuit& c, const StateVector& state, HadamardPart part,
                       const ShotConfig& cfg);

} // namespace boundaryq
