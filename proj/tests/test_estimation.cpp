#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boundaryq/dense.hpp"
#include "boundaryq/estimation.hpp"
#include "boundaryq/fermionic.hpp"

#include "support/helpers.hpp"

using namespace boundaryq;
using testsupport::to_eigen;

namespace {

double exact_b(const StateVector& state) {
    return expectation(state, hermitian_boundary(state.n())).real();
}

// Projects onto the +sqrt(n) eigenspace of B using (I + B/sqrt(n))/2.
StateVector plus_eigenstate(int n, std::uint64_t seed) {
    const Eigen::MatrixXcd b = to_sparse(hermitian_boundary(n)).to_dense();
    const Eigen::VectorXcd v = to_eigen(StateVector::haar_random(n, seed));
    Eigen::VectorXcd projected = 0.5 * (v + b * v / std::sqrt(static_cast<double>(n)));
    projected /= projected.norm();
    std::vector<complexd> amps(projected.data(), projected.data() + projected.size());
    return StateVector::from_amplitudes(n, std::move(amps));
}

} // namespace

TEST_CASE("exact analytic estimates have no bias") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& entry : state_catalog(n, 2024)) {
            const auto est = analytic_estimate(entry.state, ShotConfig::exact_mode());
            CHECK(std::abs(est.value - exact_b(entry.state)) < 1e-10);
            CHECK(est.std_error == 0.0);
        }
    }
}

TEST_CASE("eigenstates estimate to exactly sqrt(n)") {
    for (int n = 2; n <= 6; ++n) {
        const auto psi = plus_eigenstate(n, 17);
        const auto est = analytic_estimate(psi, ShotConfig::exact_mode());
        CHECK(est.value == doctest::Approx(std::sqrt(static_cast<double>(n))).epsilon(1e-10));
    }
}

TEST_CASE("sampled analytic estimates on |0...0>") {
    const int n = 4;
    const std::uint64_t shots = 1 << 16;
    const auto est = analytic_estimate(StateVector::zero_state(n),
                                       ShotConfig::with_shots(shots, 11));
    const double unit = std::sqrt(static_cast<double>(n)) / std::sqrt(static_cast<double>(shots));
    CHECK(std::abs(est.value) <= 5.0 * unit);
    CHECK(est.std_error == doctest::Approx(unit).epsilon(0.05));
}

TEST_CASE("sampled analytic estimates track the dense value") {
    const auto psi = StateVector::haar_random(4, 23);
    const double exact = exact_b(psi);
    const std::uint64_t shots = 1000000;
    const auto est = analytic_estimate(psi, ShotConfig::with_shots(shots, 29));
    CHECK(std::abs(est.value - exact) <=
          5.0 * std::sqrt(4.0) / std::sqrt(static_cast<double>(shots)));
}

TEST_CASE("one-term trotter product is exact") {
    for (double t : {0.1, 0.9}) {
        const Eigen::MatrixXcd u = unitary_of(trotter_circuit(1, t));
        Eigen::MatrixXcd expected(2, 2);
        expected << complexd{std::cos(t), 0.0}, complexd{0.0, -std::sin(t)},
                    complexd{0.0, -std::sin(t)}, complexd{std::cos(t), 0.0};
        CHECK(dense::frobenius_distance(u, expected) < 1e-13);
    }
    CHECK(dense::distance_from_identity(unitary_of(trotter_circuit(4, 0.0))) < 1e-12);
}

TEST_CASE("trotter error scales as t^2") {
    const int n = 4;
    const Eigen::MatrixXcd b = to_sparse(hermitian_boundary(n)).to_dense();
    std::vector<double> ts;
    std::vector<double> errors;
    for (double t = 0.0125; t <= 0.2 + 1e-12; t *= 2.0) {
        const Eigen::MatrixXcd exact = dense::expm(complexd{0.0, -t} * b);
        const Eigen::MatrixXcd approx = unitary_of(trotter_circuit(n, t));
        ts.push_back(t);
        errors.push_back(dense::frobenius_distance(approx, exact));
    }
    const double slope = fit_loglog_exponent(ts, errors);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("one-qubit trotter estimate has the sin(t)/t form") {
    Circuit mkplus(1);
    mkplus.append(Gate::h(0));
    const auto plus = run(mkplus, StateVector::zero_state(1));
    for (double t : {0.1, 0.05}) {
        const auto est = trotter_estimate(plus, t, ShotConfig::exact_mode());
        CHECK(est.value == doctest::Approx(std::sin(t) / t).epsilon(1e-12));
        CHECK(std::abs(est.value - 1.0) <= t * t / 6.0 + 1e-12);
    }
}

TEST_CASE("trotter bias is first order in t") {
    const auto psi = StateVector::haar_random(4, 2024);
    const double exact = exact_b(psi);
    std::vector<double> biases;
    for (double t : {0.2, 0.1, 0.05, 0.025}) {
        const auto est = trotter_estimate(psi, t, ShotConfig::exact_mode());
        biases.push_back(std::abs(est.value - exact));
    }
    for (std::size_t i = 1; i < biases.size(); ++i) {
        CHECK(biases[i] < biases[i - 1]); // monotone decrease under halving
    }
    const double ratio1 = biases[1] / biases[2];
    const double ratio2 = biases[2] / biases[3];
    CHECK(ratio1 > 1.5);
    CHECK(ratio1 < 2.5);
    CHECK(ratio2 > 1.5);
    CHECK(ratio2 < 2.5);
}

TEST_CASE("trotter bias vanishes with t across sizes") {
    for (int n = 2; n <= 6; ++n) {
        const auto psi = StateVector::haar_random(n, 300 + static_cast<std::uint64_t>(n));
        const double exact = exact_b(psi);
        double previous = 1e300;
        for (double t : {0.2, 0.1, 0.05, 0.025}) {
            const auto est = trotter_estimate(psi, t, ShotConfig::exact_mode());
            const double bias = std::abs(est.value - exact);
            CHECK(bias < previous);
            previous = bias;
        }
    }
}

TEST_CASE("shot noise doubles when t halves at fixed N") {
    const auto psi = StateVector::haar_random(4, 888);
    const std::uint64_t shots = 1 << 14;
    const auto coarse = trotter_estimate(psi, 0.2, ShotConfig::with_shots(shots, 5));
    const auto fine = trotter_estimate(psi, 0.1, ShotConfig::with_shots(shots, 5));
    CHECK(fine.std_error / coarse.std_error == doctest::Approx(2.0).epsilon(0.1));
}

TEST_CASE("trotter estimate rejects non-positive t") {
    const auto psi = StateVector::zero_state(2);
    CHECK_THROWS_AS(trotter_estimate(psi, 0.0, ShotConfig::exact_mode()),
                    std::invalid_argument);
    CHECK_THROWS_AS(trotter_estimate(psi, -0.1, ShotConfig::exact_mode()),
                    std::invalid_argument);
}

TEST_CASE("state catalog is fixed and seeded") {
    const auto catalog = state_catalog(3, 5);
    REQUIRE(catalog.size() == 3);
    CHECK(catalog[0].name == "zeros");
    CHECK(catalog[1].name == "uniform");
    CHECK(catalog[2].name == "haar");
    CHECK(catalog_state("haar", 3, 5).amplitudes() == catalog[2].state.amplitudes());
    CHECK(catalog_state("haar", 3, 6).amplitudes() != catalog[2].state.amplitudes());
    CHECK_THROWS_AS(catalog_state("bell", 3, 5), std::invalid_argument);
}

TEST_CASE("loglog fitting recovers power laws") {
    const std::vector<double> x = {2.0, 4.0, 8.0, 16.0};
    std::vector<double> y;
    for (double v : x) {
        y.push_back(7.0 * v * v * v);
    }
    CHECK(fit_loglog_exponent(x, y) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(std::isnan(fit_loglog_exponent({1.0}, {1.0})));
}

TEST_CASE("scaling experiment smoke run is deterministic") {
    ScalingConfig config;
    config.n = 2;
    config.eps_grid = {0.4, 0.2};
    config.num_seeds = 4;
    config.master_seed = 77;
    const auto report = scaling_experiment(config);
    REQUIRE(report.rows.size() == 4);
    for (const auto& row : report.rows) {
        CHECK(row.total_error >= std::abs(row.bias));
        CHECK_FALSE(row.capped);
        CHECK(row.total_error <= row.eps);
        CHECK(row.shots >= 1);
    }
    const auto again = scaling_experiment(config);
    CHECK(report.to_tsv() == again.to_tsv());
    CHECK(report.summary() == again.summary());
    CHECK(report.to_tsv().starts_with(
        "method\tn\tt\teps\tshots\tbias\tstderr\ttotal_error\tcapped\n"));
}

TEST_CASE("exhausted shot caps are flagged, not dropped") {
    ScalingConfig config;
    config.n = 3;
    config.eps_grid = {0.01};
    config.num_seeds = 2;
    config.master_seed = 3;
    config.shot_cap = 64;
    const auto report = scaling_experiment(config);
    REQUIRE(report.rows.size() == 2);
    for (const auto& row : report.rows) {
        CHECK(row.capped);
        CHECK(row.shots <= 64);
    }
    CHECK(report.summary().find("capped") != std::string::npos);
    CHECK(std::isnan(report.analytic_exponent));
}

TEST_CASE("plot data lists one point per target") {
    ScalingConfig config;
    config.n = 2;
    config.eps_grid = {0.4, 0.2};
    config.num_seeds = 2;
    config.master_seed = 9;
    const auto report = scaling_experiment(config);
    const auto analytic = report.plot_data("analytic");
    CHECK(std::count(analytic.begin(), analytic.end(), '\n') == 2);
    CHECK(analytic.starts_with("2.5 "));
}
