#pragma once

#include <vector>

#include <Eigen/Dense>

#include "boundaryq/circuit.hpp"
#include "boundaryq/pauli.hpp"
#include "boundaryq/rng.hpp"
#include "boundaryq/simulator.hpp"
#include "boundaryq/sparse.hpp"

namespace testsupport {

using namespace boundaryq;

inline PauliString random_pauli(Rng& rng, int n, bool random_phase = false) {
    std::vector<Axis> axes(static_cast<std::size_t>(n));
    for (auto& a : axes) {
        a = static_cast<Axis>(rng.next_u64() % 4);
    }
    const int phase = random_phase ? static_cast<int>(rng.next_u64() % 4) : 0;
    return PauliString(axes, phase);
}

inline OperatorSum random_operator_sum(Rng& rng, int n, int terms) {
    OperatorSum out(n);
    for (int i = 0; i < terms; ++i) {
        out.add_term(complexd{rng.next_normal(), rng.next_normal()}, random_pauli(rng, n, true));
    }
    return out;
}

inline Circuit random_circuit(Rng& rng, int n, int gates) {
    Circuit c(n);
    for (int i = 0; i < gates; ++i) {
        const int q = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
        switch (rng.next_u64() % 7) {
            case 0: c.append(Gate::h(q)); break;
            case 1: c.append(Gate::s(q)); break;
            case 2: c.append(Gate::sdg(q)); break;
            case 3: c.append(Gate::x(q)); break;
            case 4: c.append(Gate::rz(q, 4.0 * M_PI * (rng.next_double() - 0.5))); break;
            case 5: c.append(Gate::rx(q, 4.0 * M_PI * (rng.next_double() - 0.5))); break;
            default: {
                if (n < 2) {
                    c.append(Gate::h(q));
                    break;
                }
                int q2 = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
                if (q2 == q) {
                    q2 = (q + 1) % n;
                }
                c.append(Gate::cnot(q, q2));
                break;
            }
        }
    }
    return c;
}

inline Eigen::VectorXcd to_eigen(const StateVector& state) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(state.dim()));
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = state.amplitudes()[i];
    }
    return v;
}

/// Closed-form exponential of a phase-(+1) Pauli word:
/// exp(+i P theta/2) = cos(theta/2) I + i sin(theta/2) P, since P^2 = I.
inline Eigen::MatrixXcd pauli_exponential_dense(const PauliString& p, double theta) {
    const Eigen::MatrixXcd pd = to_sparse(p).to_dense();
    const Eigen::Index dim = pd.rows();
    return std::cos(theta / 2.0) * Eigen::MatrixXcd::Identity(dim, dim) +
           complexd{0.0, std::sin(theta / 2.0)} * pd;
}

inline double linear_fit_r_squared(const std::vector<double>& x, const std::vector<double>& y) {
    const double count = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
    }
    const double cov = count * sxy - sx * sy;
    const double vx = count * sxx - sx * sx;
    const double vy = count * syy - sy * sy;
    return (cov * cov) / (vx * vy);
}

} // namespace testsupport
