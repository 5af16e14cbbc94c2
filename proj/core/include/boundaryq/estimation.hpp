#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boundaryq/circuit.hpp"
#include "boundaryq/simulator.hpp"

namespace boundaryq {

/// Analytic estimator of <B>: applies the cascade R as a circuit, samples
/// the single Pauli Q_0, and scales by sqrt(n). No Trotter or Taylor error;
/// in exact mode this equals the dense <B> to rounding.
Estimate analytic_estimate(const StateVector& state, const ShotConfig& cfg);

/// First-order Trotter product for e^{-iBt}: factors e^{-iQ_i t} in fixed
/// order (i = 0 applied first), each compiled as an (n-i)-qubit Pauli
/// rotation.
Circuit trotter_circuit(int n, double t);

/// Trotterized estimator of <B>: Hadamard-test of Im<psi|prod e^{-iQ_i t}|psi>,
/// estimate = -Im/t. Bias is O(t) as t -> 0; shot noise is amplified by 1/t.
/// Requires t > 0.
Estimate trotter_estimate(const StateVector& state, double t, const ShotConfig& cfg);

struct CatalogState {
    std::string name; // "zeros", "uniform", "haar"
    StateVector state;
};

/// Fixed test-state catalog so reported scaling exponents are comparable
/// across runs. The haar entry is seeded from `seed`.
std::vector<CatalogState> state_catalog(int n, std::uint64_t seed);
StateVector catalog_state(const std::string& name, int n, std::uint64_t seed);

struct ScalingRow {
    std::string method; // "analytic" | "trotter"
    int n = 0;
    double t = 0.0; // 0 for analytic
    double eps = 0.0;
    std::uint64_t shots = 0;
    double bias = 0.0;
    double std_error = 0.0;
    double total_error = 0.0; // |bias| + median shot deviation; >= |bias|
    bool capped = false;      // shot cap exhausted before reaching eps
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    double analytic_exponent = 0.0; // log-log slope of shots vs 1/eps
    double trotter_exponent = 0.0;

    std::string to_tsv() const;     // header + one row per cell
    std::string summary() const;    // fitted exponents + ratio monotonicity
    /// Two-column "1/eps shots" lines for one method (gnuplot-ready).
    std::string plot_data(const std::string& method) const;

    bool shot_ratio_monotone() const; // trotter/analytic grows as eps shrinks
};

struct ScalingConfig {
    int n = 4;
    std::vector<double> eps_grid = {0.2, 0.1, 0.05};
    int num_seeds = 1024;        // shards per cell; median over these
    std::uint64_t master_seed = 1;
    std::uint64_t shot_cap = std::uint64_t{1} << 26;
    std::uint64_t base_shots = 16;
    double ladder_ratio = 1.0905077326652577; // 2^(1/8)
    std::string state = "haar";
    int threads = 0; // 0 = hardware concurrency; sharding is deterministic either way
};

/// For each target eps: the analytic method searches the shot ladder until
/// |bias| + median-over-seeds shot deviation <= eps; the trotter method
/// first fixes t = eps/n, then searches. Rows that exhaust the shot cap are
/// flagged, not dropped. Deterministic from the config alone.
ScalingReport scaling_experiment(const ScalingConfig& config);

/// Least-squares slope of ln(y) against ln(x).
double fit_loglog_exponent(const std::vector<double>& x, const std::vector<double>& y);

} // namespace boundaryq
