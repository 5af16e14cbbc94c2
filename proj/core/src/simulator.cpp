#include "boundaryq/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "boundaryq/rng.hpp"

namespace boundaryq {

namespace {

void check_norm(const StateVector& state) {
    if (std::abs(state.norm() - 1.0) > 1e-6) {
        throw std::invalid_argument("state is not normalized");
    }
}

Estimate from_outcomes(double sum, std::uint64_t shots) {
    Estimate est;
    est.shots = shots;
    est.value = sum / static_cast<double>(shots);
    if (shots > 1) {
        const double spread = std::max(0.0, 1.0 - est.value * est.value);
        est.std_error = std::sqrt(spread / static_cast<double>(shots - 1));
    }
    return est;
}

// Draws `shots` +-1 outcomes with P(+1) = p_plus and aggregates them.
Estimate sample_binary(double p_plus, const ShotConfig& cfg) {
    Rng rng(cfg.seed);
    double sum = 0.0;
    for (std::uint64_t s = 0; s < cfg.shots; ++s) {
        sum += rng.next_double() < p_plus ? 1.0 : -1.0;
    }
    return from_outcomes(sum, cfg.shots);
}

} // namespace

StateVector::StateVector(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("statevector qubit count must be positive");
    }
    check_dense_limit(n, "StateVector");
    amps_.assign(dim(), complexd{0.0, 0.0});
    amps_[0] = complexd{1.0, 0.0};
}

StateVector StateVector::zero_state(int n) {
    return StateVector(n);
}

StateVector StateVector::uniform_superposition(int n) {
    StateVector state(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(state.dim()));
    std::fill(state.amps_.begin(), state.amps_.end(), complexd{amp, 0.0});
    return state;
}

StateVector StateVector::haar_random(int n, std::uint64_t seed) {
    StateVector state(n);
    Rng rng(seed);
    double norm_sq = 0.0;
    for (auto& amp : state.amps_) {
        amp = complexd{rng.next_normal(), rng.next_normal()};
        norm_sq += std::norm(amp);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& amp : state.amps_) {
        amp *= inv;
    }
    return state;
}

StateVector StateVector::from_amplitudes(int n, std::vector<complexd> amplitudes) {
    StateVector state(n);
    if (amplitudes.size() != state.dim()) {
        throw std::invalid_argument("amplitude count does not match qubit count");
    }
    state.amps_ = std::move(amplitudes);
    return state;
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const auto& amp : amps_) {
        sum += std::norm(amp);
    }
    return std::sqrt(sum);
}

ShotConfig ShotConfig::with_shots(std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shot count must be at least 1");
    }
    return {shots, seed, false};
}

ShotConfig ShotConfig::exact_mode() {
    return {1, 0, true};
}

StateVector run(const Circuit& c, const StateVector& input) {
    if (input.n() != c.total_qubits()) {
        throw std::invalid_argument("statevector size does not match circuit wires");
    }
    StateVector state = input;
    const std::uint64_t dim = state.dim();
    for (const auto& g : c.gates()) {
        apply_gate(g, state.amps_.data(), dim);
    }
    return state;
}

complexd expectation(const StateVector& state, const PauliString& p) {
    if (p.n() != state.n()) {
        throw std::invalid_argument("operator and state qubit counts differ");
    }
    const auto& amps = state.amplitudes();
    const std::uint64_t flips = p.flip_mask();
    const std::uint64_t signs = p.sign_mask();
    const int ys = std::popcount(flips & signs);
    complexd base = p.phase();
    for (int k = 0; k < (ys & 3); ++k) {
        base *= complexd{0.0, 1.0};
    }
    complexd sum{0.0, 0.0};
    for (std::uint64_t col = 0; col < state.dim(); ++col) {
        const complexd value =
            (std::popcount(col & signs) & 1) != 0 ? -base : base;
        sum += std::conj(amps[col ^ flips]) * value * amps[col];
    }
    return sum;
}

complexd expectation(const StateVector& state, const OperatorSum& op) {
    if (op.n() != state.n()) {
        throw std::invalid_argument("operator and state qubit counts differ");
    }
    complexd sum{0.0, 0.0};
    for (const auto& term : op.terms()) {
        sum += term.coeff * expectation(state, term.string);
    }
    return sum;
}

Estimate sample_pauli(const StateVector& state, const PauliString& p, const ShotConfig& cfg) {
    if (p.n() != state.n()) {
        throw std::invalid_argument("operator and state qubit counts differ");
    }
    if (p.phase_pow() != 0) {
        throw std::invalid_argument("sample_pauli requires a phase-(+1) Pauli");
    }
    check_norm(state);

    if (cfg.exact) {
        return {expectation(state, p).real(), 0.0, 0};
    }

    // Rotate the support of p into the Z basis, then parity-sample.
    std::vector<complexd> amps = state.amplitudes();
    const std::uint64_t dim = state.dim();
    std::uint64_t support = 0;
    for (int q = 0; q < p.n(); ++q) {
        switch (p.axis(q)) {
            case Axis::X:
                apply_gate(Gate::h(q), amps.data(), dim);
                support |= std::uint64_t{1} << q;
                break;
            case Axis::Y:
                apply_gate(Gate::rx(q, M_PI / 2.0), amps.data(), dim);
                support |= std::uint64_t{1} << q;
                break;
            case Axis::Z:
                support |= std::uint64_t{1} << q;
                break;
            case Axis::I:
                break;
        }
    }

    std::vector<double> cdf(dim);
    double acc = 0.0;
    for (std::uint64_t i = 0; i < dim; ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    const double total = acc;

    Rng rng(cfg.seed);
    double sum = 0.0;
    for (std::uint64_t s = 0; s < cfg.shots; ++s) {
        const double u = rng.next_double() * total;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::uint64_t outcome =
            static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
        const std::uint64_t index = std::min<std::uint64_t>(outcome, dim - 1);
        sum += (std::popcount(index & support) & 1) != 0 ? -1.0 : 1.0;
    }
    return from_outcomes(sum, cfg.shots);
}

Estimate hadamard_test(const Circuit& c, const StateVector& state, HadamardPart part,
                       const ShotConfig& cfg) {
    if (state.n() != c.total_qubits()) {
        throw std::invalid_argument("statevector size does not match circuit wires");
    }
    check_norm(state);
    check_dense_limit(state.n() + 1, "hadamard_test");

    const int ancilla = state.n();
    const std::uint64_t half = state.dim();
    const std::uint64_t dim = half << 1;
    std::vector<complexd> amps(dim, complexd{0.0, 0.0});
    std::copy(state.amplitudes().begin(), state.amplitudes().end(), amps.begin());

    apply_gate(Gate::h(ancilla), amps.data(), dim);
    for (const auto& g : c.gates()) {
        apply_gate_controlled(g, ancilla, amps.data(), dim);
    }
    if (part == HadamardPart::Imag) {
        apply_gate(Gate::sdg(ancilla), amps.data(), dim);
    }
    apply_gate(Gate::h(ancilla), amps.data(), dim);

    double p1 = 0.0;
    for (std::uint64_t i = half; i < dim; ++i) {
        p1 += std::norm(amps[i]);
    }
    const double exact_value = 1.0 - 2.0 * p1;
    if (cfg.exact) {
        return {exact_value, 0.0, 0};
    }
    return sample_binary(1.0 - p1, cfg);
}

} // namespace boundaryq
