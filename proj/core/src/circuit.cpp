#include "boundaryq/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace boundaryq {

namespace {

constexpr double kHalfPi = M_PI / 2.0;

void check_qubit(int q, int total) {
    if (q < 0 || q >= total) {
        throw std::invalid_argument("gate qubit " + std::to_string(q) +
                                    " out of range for circuit with " + std::to_string(total) +
                                    " wires");
    }
}

// Applies a 2x2 matrix to the amplitude pairs split by `qubit`, visiting only
// indices where all bits in `require_mask` are set.
template <typename Update>
void for_each_pair(int qubit, std::uint64_t require_mask, std::uint64_t dim, Update&& update) {
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    for (std::uint64_t base = 0; base < dim; ++base) {
        if ((base & bit) != 0 || (base & require_mask) != require_mask) {
            continue;
        }
        update(base, base | bit);
    }
}

void apply_gate_masked(const Gate& g, std::uint64_t require_mask, complexd* amps,
                       std::uint64_t dim) {
    constexpr complexd kI{0.0, 1.0};
    switch (g.kind) {
        case GateKind::H: {
            const double inv_sqrt2 = M_SQRT1_2;
            for_each_pair(g.q0, require_mask, dim, [&](std::uint64_t i0, std::uint64_t i1) {
                const complexd a = amps[i0];
                const complexd b = amps[i1];
                amps[i0] = (a + b) * inv_sqrt2;
                amps[i1] = (a - b) * inv_sqrt2;
            });
            break;
        }
        case GateKind::S: {
            const std::uint64_t bit = std::uint64_t{1} << g.q0;
            for (std::uint64_t i = 0; i < dim; ++i) {
                if ((i & bit) != 0 && (i & require_mask) == require_mask) {
                    amps[i] *= kI;
                }
            }
            break;
        }
        case GateKind::Sdg: {
            const std::uint64_t bit = std::uint64_t{1} << g.q0;
            for (std::uint64_t i = 0; i < dim; ++i) {
                if ((i & bit) != 0 && (i & require_mask) == require_mask) {
                    amps[i] *= -kI;
                }
            }
            break;
        }
        case GateKind::X: {
            for_each_pair(g.q0, require_mask, dim, [&](std::uint64_t i0, std::uint64_t i1) {
                std::swap(amps[i0], amps[i1]);
            });
            break;
        }
        case GateKind::RZ: {
            const complexd phase0 = std::exp(-kI * (g.angle / 2.0));
            const complexd phase1 = std::exp(kI * (g.angle / 2.0));
            for_each_pair(g.q0, require_mask, dim, [&](std::uint64_t i0, std::uint64_t i1) {
                amps[i0] *= phase0;
                amps[i1] *= phase1;
            });
            break;
        }
        case GateKind::RX: {
            const double c = std::cos(g.angle / 2.0);
            const complexd ms{0.0, -std::sin(g.angle / 2.0)};
            for_each_pair(g.q0, require_mask, dim, [&](std::uint64_t i0, std::uint64_t i1) {
                const complexd a = amps[i0];
                const complexd b = amps[i1];
                amps[i0] = c * a + ms * b;
                amps[i1] = ms * a + c * b;
            });
            break;
        }
        case GateKind::CNOT: {
            const std::uint64_t cbit = std::uint64_t{1} << g.q0;
            for_each_pair(g.q1, require_mask | cbit, dim, [&](std::uint64_t i0, std::uint64_t i1) {
                std::swap(amps[i0], amps[i1]);
            });
            break;
        }
    }
}

} // namespace

Gate Gate::h(int q) { return {GateKind::H, q}; }
Gate Gate::s(int q) { return {GateKind::S, q}; }
Gate Gate::sdg(int q) { return {GateKind::Sdg, q}; }
Gate Gate::x(int q) { return {GateKind::X, q}; }
Gate Gate::rz(int q, double angle) { return {GateKind::RZ, q, -1, angle}; }
Gate Gate::rx(int q, double angle) { return {GateKind::RX, q, -1, angle}; }

Gate Gate::cnot(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    return {GateKind::CNOT, control, target, 0.0};
}

bool Gate::operator==(const Gate& other) const {
    return kind == other.kind && q0 == other.q0 && q1 == other.q1 && angle == other.angle;
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::X: return "x";
        case GateKind::RZ: return "rz";
        case GateKind::RX: return "rx";
        case GateKind::CNOT: return "cx";
    }
    return "?";
}

Circuit::Circuit(int n, int ancilla_count) : n_(n), ancilla_count_(ancilla_count) {
    if (n < 1) {
        throw std::invalid_argument("circuit qubit count must be positive");
    }
    if (ancilla_count < 0 || ancilla_count > 1) {
        throw std::invalid_argument("ancilla count must be 0 or 1");
    }
}

void Circuit::append(const Gate& g) {
    check_qubit(g.q0, total_qubits());
    if (g.kind == GateKind::CNOT) {
        check_qubit(g.q1, total_qubits());
        if (g.q0 == g.q1) {
            throw std::invalid_argument("CNOT control and target must differ");
        }
    }
    gates_.push_back(g);
}

void Circuit::append(const std::vector<Gate>& gs) {
    for (const auto& g : gs) {
        append(g);
    }
}

bool Circuit::operator==(const Circuit& other) const {
    return total_qubits() == other.total_qubits() && gates_ == other.gates_;
}

void apply_gate(const Gate& g, complexd* amps, std::uint64_t dim) {
    apply_gate_masked(g, 0, amps, dim);
}

void apply_gate_controlled(const Gate& g, int control, complexd* amps, std::uint64_t dim) {
    apply_gate_masked(g, std::uint64_t{1} << control, amps, dim);
}

std::vector<Gate> compile_pauli_exponential(const PauliString& p, double angle) {
    if (p.phase_pow() != 0) {
        throw std::invalid_argument("Pauli exponential requires a phase-(+1) word");
    }
    std::vector<int> support;
    for (int q = 0; q < p.n(); ++q) {
        if (p.axis(q) != Axis::I) {
            support.push_back(q);
        }
    }
    if (support.empty()) {
        throw std::invalid_argument("Pauli exponential requires non-identity support");
    }

    std::vector<Gate> gates;
    // Basis changes into Z: H for X, RX(pi/2) for Y.
    for (int q : support) {
        switch (p.axis(q)) {
            case Axis::X: gates.push_back(Gate::h(q)); break;
            case Axis::Y: gates.push_back(Gate::rx(q, kHalfPi)); break;
            default: break;
        }
    }
    // Parity ladder onto the lowest support qubit.
    for (std::size_t j = support.size(); j-- > 1;) {
        gates.push_back(Gate::cnot(support[j], support[j - 1]));
    }
    // exp(+i P angle/2) = exp(-i (-angle)/2 Z...Z) in the rotated frame.
    gates.push_back(Gate::rz(support[0], -angle));
    for (std::size_t j = 1; j < support.size(); ++j) {
        gates.push_back(Gate::cnot(support[j], support[j - 1]));
    }
    for (std::size_t idx = support.size(); idx-- > 0;) {
        const int q = support[idx];
        switch (p.axis(q)) {
            case Axis::X: gates.push_back(Gate::h(q)); break;
            case Axis::Y: gates.push_back(Gate::rx(q, -kHalfPi)); break;
            default: break;
        }
    }
    return gates;
}

std::vector<Gate> compile_pauli_rotation(const PauliString& p, double angle) {
    if (p.weight() != 2) {
        throw std::invalid_argument("two-qubit Pauli rotation requires exactly two non-identity axes");
    }
    return compile_pauli_exponential(p, angle);
}

Eigen::MatrixXcd unitary_of(const Circuit& c) {
    check_dense_limit(c.total_qubits(), "unitary_of");
    const std::uint64_t dim = std::uint64_t{1} << c.total_qubits();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim),
                                                    static_cast<Eigen::Index>(dim));
    for (const auto& g : c.gates()) {
        for (std::uint64_t col = 0; col < dim; ++col) {
            apply_gate(g, u.data() + col * dim, dim);
        }
    }
    return u;
}

std::string emit_text(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.total_qubits()) + "\n";
    for (const auto& g : c.gates()) {
        out += gate_name(g.kind);
        out += ' ';
        out += std::to_string(g.q0);
        if (g.kind == GateKind::CNOT) {
            out += ' ';
            out += std::to_string(g.q1);
        } else if (g.kind == GateKind::RZ || g.kind == GateKind::RX) {
            out += ' ';
            out += format_double(g.angle);
        }
        out += '\n';
    }
    return out;
}

Circuit parse_text(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    bool have_header = false;
    int total = 0;
    std::vector<Gate> gates;
    while (std::getline(stream, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string name;
        fields >> name;
        if (!have_header) {
            int declared = 0;
            if (name != "qubits" || !(fields >> declared) || declared < 1) {
                throw std::invalid_argument("expected 'qubits <count>' header, got: " + line);
            }
            total = declared;
            have_header = true;
            continue;
        }
        int q0 = 0;
        if (!(fields >> q0)) {
            throw std::invalid_argument("malformed gate line: " + line);
        }
        if (name == "h") {
            gates.push_back(Gate::h(q0));
        } else if (name == "s") {
            gates.push_back(Gate::s(q0));
        } else if (name == "sdg") {
            gates.push_back(Gate::sdg(q0));
        } else if (name == "x") {
            gates.push_back(Gate::x(q0));
        } else if (name == "rz" || name == "rx") {
            double angle = 0.0;
            if (!(fields >> angle)) {
                throw std::invalid_argument("missing angle: " + line);
            }
            gates.push_back(name == "rz" ? Gate::rz(q0, angle) : Gate::rx(q0, angle));
        } else if (name == "cx") {
            int q1 = 0;
            if (!(fields >> q1)) {
                throw std::invalid_argument("missing CNOT target: " + line);
            }
            gates.push_back(Gate::cnot(q0, q1));
        } else {
            throw std::invalid_argument("unknown gate '" + name + "'");
        }
    }
    if (!have_header) {
        throw std::invalid_argument("circuit text has no qubits header");
    }
    Circuit c(total);
    c.append(gates);
    return c;
}

CircuitCounts depth_and_counts(const Circuit& c) {
    CircuitCounts counts;
    counts.total_gates = static_cast<int>(c.gates().size());
    std::vector<int> layer(static_cast<std::size_t>(c.total_qubits()), 0);
    GateKind previous = GateKind::H;
    bool first = true;
    for (const auto& g : c.gates()) {
        int at = layer[static_cast<std::size_t>(g.q0)];
        if (g.kind == GateKind::CNOT) {
            at = std::max(at, layer[static_cast<std::size_t>(g.q1)]);
        }
        ++at;
        layer[static_cast<std::size_t>(g.q0)] = at;
        if (g.kind == GateKind::CNOT) {
            layer[static_cast<std::size_t>(g.q1)] = at;
        }
        counts.depth = std::max(counts.depth, at);
        // A compiled Pauli-rotation block puts its RZ directly after the
        // entangling CNOT; a bare single-qubit RZ (e.g. the H-RZ-H center of
        // a one-qubit exponential) is not counted.
        if (!first && g.kind == GateKind::RZ && previous == GateKind::CNOT) {
            ++counts.two_qubit_rotations;
        }
        previous = g.kind;
        first = false;
    }
    return counts;
}

} // namespace boundaryq
