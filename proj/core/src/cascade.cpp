#include "boundaryq/cascade.hpp"

#include <cmath>
#include <sstream>

#include "boundaryq/fermionic.hpp"
#include "boundaryq/simplicial.hpp"

namespace boundaryq {

namespace {

// Generator word of R_i: Y on qubit i, X on qubit i-1.
PauliString step_generator(int i, int n) {
    std::vector<Axis> axes(static_cast<std::size_t>(n), Axis::I);
    axes[static_cast<std::size_t>(i)] = Axis::Y;
    axes[static_cast<std::size_t>(i - 1)] = Axis::X;
    return PauliString(axes);
}

// R_i = cos(t/2) I + i sin(t/2) (Y_i X_{i-1}) acts as a signed pair mix on
// rows r <-> r ^ flip (flip = bits i, i-1):
//   row(bit_i = 0) -> c*row + s*partner,  row(bit_i = 1) -> c*row - s*partner.
// Left-multiplying a dense matrix is therefore O(4^n) per step.
void apply_step_left(Eigen::MatrixXcd& m, int i, double theta) {
    const std::uint64_t dim = static_cast<std::uint64_t>(m.rows());
    const std::uint64_t flip = (std::uint64_t{1} << i) | (std::uint64_t{1} << (i - 1));
    const std::uint64_t ibit = std::uint64_t{1} << i;
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    for (std::uint64_t r = 0; r < dim; ++r) {
        if ((r & ibit) != 0) {
            continue;
        }
        const std::uint64_t partner = r ^ flip;
        Eigen::RowVectorXcd top = m.row(static_cast<Eigen::Index>(r));
        Eigen::RowVectorXcd bottom = m.row(static_cast<Eigen::Index>(partner));
        m.row(static_cast<Eigen::Index>(r)) = c * top + s * bottom;
        m.row(static_cast<Eigen::Index>(partner)) = c * bottom - s * top;
    }
}

// M -> M * R_i^dagger, the column-space mirror of apply_step_left.
void apply_step_right_dagger(Eigen::MatrixXcd& m, int i, double theta) {
    const std::uint64_t dim = static_cast<std::uint64_t>(m.cols());
    const std::uint64_t flip = (std::uint64_t{1} << i) | (std::uint64_t{1} << (i - 1));
    const std::uint64_t ibit = std::uint64_t{1} << i;
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    for (std::uint64_t col = 0; col < dim; ++col) {
        if ((col & ibit) != 0) {
            continue;
        }
        const std::uint64_t partner = col ^ flip;
        Eigen::VectorXcd left = m.col(static_cast<Eigen::Index>(col));
        Eigen::VectorXcd right = m.col(static_cast<Eigen::Index>(partner));
        m.col(static_cast<Eigen::Index>(col)) = c * left + s * right;
        m.col(static_cast<Eigen::Index>(partner)) = c * right - s * left;
    }
}

double conjugation_residual(int n, const std::vector<RotationStep>& steps) {
    check_dense_limit(n, "conjugate_check");
    Eigen::MatrixXcd m = to_sparse(hermitian_boundary(n)).to_dense();
    for (const auto& step : steps) {
        apply_step_left(m, step.index, step.theta);
        apply_step_right_dagger(m, step.index, step.theta);
    }
    const Eigen::MatrixXcd target =
        std::sqrt(static_cast<double>(n)) * to_sparse(cascade_target_pauli(n)).to_dense();
    return (m - target).norm();
}

} // namespace

RotationCascade::RotationCascade(int n, std::vector<RotationStep> steps)
    : n_(n), steps_(std::move(steps)) {
    if (n < 1) {
        throw std::invalid_argument("cascade qubit count must be positive");
    }
    for (const auto& step : steps_) {
        if (step.index < 1 || step.index >= n) {
            throw std::invalid_argument("rotation index " + std::to_string(step.index) +
                                        " out of range for n = " + std::to_string(n));
        }
    }
}

std::string RotationCascade::to_text() const {
    std::string out;
    for (const auto& step : steps_) {
        out += std::to_string(step.index);
        out += ' ';
        out += format_double(step.theta);
        out += '\n';
    }
    return out;
}

RotationCascade RotationCascade::from_text(std::string_view text, int n) {
    std::vector<RotationStep> steps;
    std::istringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        int index = 0;
        double theta = 0.0;
        if (!(fields >> index >> theta)) {
            throw std::invalid_argument("malformed cascade line: " + line);
        }
        steps.push_back({index, theta});
    }
    return RotationCascade(n, std::move(steps));
}

RotationCascade build_cascade(int n) {
    if (n < 1) {
        throw std::invalid_argument("cascade qubit count must be positive");
    }
    std::vector<RotationStep> steps;
    steps.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
    for (int i = n - 1; i >= 1; --i) {
        steps.push_back({i, std::atan2(std::sqrt(static_cast<double>(n - i)), 1.0)});
    }
    return RotationCascade(n, std::move(steps));
}

PauliString cascade_target_pauli(int n) {
    return hermitian_term(0, n);
}

std::vector<Gate> step_gates(const RotationStep& step) {
    // Needs only the two-qubit window; the word length is i+1.
    PauliString generator = step_generator(step.index, step.index + 1);
    return compile_pauli_rotation(generator, step.theta);
}

std::vector<Gate> cascade_gates(const RotationCascade& cascade) {
    std::vector<Gate> gates;
    for (const auto& step : cascade.steps()) {
        auto block = step_gates(step);
        gates.insert(gates.end(), block.begin(), block.end());
    }
    return gates;
}

std::vector<Gate> inverse_cascade_gates(const RotationCascade& cascade) {
    std::vector<Gate> gates;
    const auto& steps = cascade.steps();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        auto block = step_gates({it->index, -it->theta});
        gates.insert(gates.end(), block.begin(), block.end());
    }
    return gates;
}

Eigen::MatrixXcd cascade_unitary(const RotationCascade& cascade) {
    check_dense_limit(cascade.n(), "cascade_unitary");
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << cascade.n());
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto& step : cascade.steps()) {
        apply_step_left(u, step.index, step.theta);
    }
    return u;
}

double conjugate_check(int n) {
    return conjugation_residual(n, build_cascade(n).steps());
}

double conjugate_check_perturbed(int n, int which, double delta) {
    auto steps = build_cascade(n).steps();
    if (steps.empty()) {
        return conjugation_residual(n, steps);
    }
    const std::size_t at = static_cast<std::size_t>(which) % steps.size();
    steps[at].theta += delta;
    return conjugation_residual(n, steps);
}

ScaledCircuit analytic_boundary_circuit(int n) {
    RotationCascade cascade = build_cascade(n);
    Circuit circuit(n);
    circuit.append(cascade_gates(cascade));
    // Central Pauli Q_0 = Z...ZX: X on qubit 0, Z = S.S on each z-tail qubit.
    circuit.append(Gate::x(0));
    for (int q = 1; q < n; ++q) {
        circuit.append(Gate::s(q));
        circuit.append(Gate::s(q));
    }
    circuit.append(inverse_cascade_gates(cascade));
    return {std::move(circuit), std::sqrt(static_cast<double>(n))};
}

double evolution_central_angle(int n, double t) {
    return std::fmod(2.0 * std::sqrt(static_cast<double>(n)) * t, 4.0 * M_PI);
}

Circuit evolution_circuit(int n, double t) {
    if (!std::isfinite(t)) {
        throw std::invalid_argument("evolution time must be finite");
    }
    RotationCascade cascade = build_cascade(n);
    Circuit circuit(n);
    circuit.append(cascade_gates(cascade));
    // e^{-i sqrt(n) t Q_0} with the angle reduced classically; circuit shape
    // is independent of t.
    circuit.append(compile_pauli_exponential(cascade_target_pauli(n),
                                             -evolution_central_angle(n, t)));
    circuit.append(inverse_cascade_gates(cascade));
    return circuit;
}

SparseOperator restricted_from_hermitian(int k, int n) {
    if (k < 1 || k > n) {
        throw std::out_of_range("dimension index k must satisfy 1 <= k <= n");
    }
    const SparseOperator b = to_sparse(hermitian_boundary(n));
    return projector(k - 1, n) * b * projector(k, n);
}

} // namespace boundaryq
