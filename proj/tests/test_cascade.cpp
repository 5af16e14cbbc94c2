#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boundaryq/cascade.hpp"
#include "boundaryq/dense.hpp"
#include "boundaryq/fermionic.hpp"
#include "boundaryq/rng.hpp"
#include "boundaryq/simplicial.hpp"

#include "support/paper_matrices.hpp"

using namespace boundaryq;

TEST_CASE("cascade angles follow atan2(sqrt(n-i), 1)") {
    const auto empty = build_cascade(1);
    CHECK(empty.steps().empty());

    const auto two = build_cascade(2);
    REQUIRE(two.steps().size() == 1);
    CHECK(two.steps()[0].index == 1);
    CHECK(two.steps()[0].theta == doctest::Approx(M_PI / 4.0).epsilon(1e-15));

    const auto four = build_cascade(4);
    REQUIRE(four.steps().size() == 3);
    const int expected_indices[3] = {3, 2, 1};
    for (int s = 0; s < 3; ++s) {
        CHECK(four.steps()[s].index == expected_indices[s]);
        CHECK(four.steps()[s].theta ==
              std::atan2(std::sqrt(static_cast<double>(4 - expected_indices[s])), 1.0));
    }
    CHECK(four.steps()[0].theta == doctest::Approx(M_PI / 4.0).epsilon(1e-15));
    CHECK(four.steps()[2].theta == doctest::Approx(M_PI / 3.0).epsilon(1e-15));
}

TEST_CASE("the n = 2 cascade unitary is the worked matrix") {
    CHECK(dense::frobenius_distance(cascade_unitary(build_cascade(2)),
                                    testsupport::rotation_r1_n2()) < 1e-15);
}

TEST_CASE("cascade unitary agrees with its gate compilation") {
    for (int n = 1; n <= 5; ++n) {
        const auto cascade = build_cascade(n);
        Circuit c(n);
        c.append(cascade_gates(cascade));
        CHECK(dense::frobenius_distance(unitary_of(c), cascade_unitary(cascade)) < 1e-12);

        Circuit inv(n);
        inv.append(inverse_cascade_gates(cascade));
        CHECK(dense::frobenius_distance(unitary_of(inv),
                                        cascade_unitary(cascade).adjoint()) < 1e-12);
    }
}

TEST_CASE("conjugation maps B onto sqrt(n) times the single Pauli") {
    for (int n = 1; n <= 10; ++n) {
        CHECK(conjugate_check(n) <= 1e-10);
    }
    CHECK(conjugate_check(1) == 0.0);
    CHECK(conjugate_check(2) <= 1e-12);

    // n = 4 conjugation lands on 2 Q_0 to dense product accuracy.
    const auto cascade = build_cascade(4);
    const Eigen::MatrixXcd r = cascade_unitary(cascade);
    const Eigen::MatrixXcd b = to_sparse(hermitian_boundary(4)).to_dense();
    const Eigen::MatrixXcd target = 2.0 * to_sparse(cascade_target_pauli(4)).to_dense();
    CHECK(dense::frobenius_distance(r * b * r.adjoint(), target) < 1e-12);
}

TEST_CASE("a perturbed cascade fails the conjugation residual") {
    for (int n = 2; n <= 5; ++n) {
        CHECK(conjugate_check_perturbed(n, 0, 0.05) > 1e-3);
    }
    // n = 1 has no steps to perturb; the residual stays zero.
    CHECK(conjugate_check_perturbed(1, 0, 0.05) == 0.0);
}

TEST_CASE("telescoping: each step folds one term into the next coefficient") {
    for (int n = 2; n <= 6; ++n) {
        const auto full = build_cascade(n);
        const Eigen::MatrixXcd b = to_sparse(hermitian_boundary(n)).to_dense();
        for (std::size_t m = 1; m <= full.steps().size(); ++m) {
            const RotationCascade partial(
                n, std::vector<RotationStep>(full.steps().begin(),
                                             full.steps().begin() + static_cast<long>(m)));
            const Eigen::MatrixXcd r = cascade_unitary(partial);
            OperatorSum expected(n);
            const int head = n - 1 - static_cast<int>(m);
            expected.add_term(std::sqrt(static_cast<double>(m + 1)), hermitian_term(head, n));
            for (int i = 0; i < head; ++i) {
                expected.add_term(1.0, hermitian_term(i, n));
            }
            const Eigen::MatrixXcd want = to_sparse(expected.canonicalize()).to_dense();
            CHECK(dense::frobenius_distance(r * b * r.adjoint(), want) < 1e-12);
        }
    }
}

TEST_CASE("analytic circuit: unitary, hermitian after scaling, and exact B") {
    for (int n = 1; n <= 8; ++n) {
        const auto scaled = analytic_boundary_circuit(n);
        CHECK(scaled.scale == std::sqrt(static_cast<double>(n)));
        const Eigen::MatrixXcd u = unitary_of(scaled.circuit);
        CHECK((u * u.adjoint() -
               Eigen::MatrixXcd::Identity(u.rows(), u.cols())).norm() < 1e-10);
        const Eigen::MatrixXcd scaled_u = scaled.scale * u;
        CHECK((scaled_u - scaled_u.adjoint()).norm() < 1e-10);
        CHECK(dense::frobenius_distance(scaled_u,
                                        to_sparse(hermitian_boundary(n)).to_dense()) < 1e-10);
    }

    const auto one = analytic_boundary_circuit(1);
    REQUIRE(one.circuit.gates().size() == 1);
    CHECK(one.circuit.gates()[0].kind == GateKind::X);
    CHECK(one.scale == 1.0);
}

TEST_CASE("evolution circuit matches closed forms") {
    for (double t : {0.0, 0.37, 1.0, -2.4, 9.7}) {
        const Eigen::MatrixXcd u1 = unitary_of(evolution_circuit(1, t));
        CHECK(dense::frobenius_distance(u1, testsupport::evolution_n1(t)) < 1e-12);

        const Eigen::MatrixXcd u2 = unitary_of(evolution_circuit(2, t));
        CHECK(dense::frobenius_distance(u2, testsupport::evolution_n2(t)) < 1e-10);
    }
}

TEST_CASE("evolution circuit matches the matrix exponential oracle") {
    Rng rng(51);
    for (int n = 1; n <= 6; ++n) {
        const Eigen::MatrixXcd b = to_sparse(hermitian_boundary(n)).to_dense();
        for (int trial = 0; trial < 3; ++trial) {
            const double t = 4.0 * M_PI * (rng.next_double() - 0.5);
            const Eigen::MatrixXcd expected = dense::expm(complexd{0.0, -t} * b);
            CHECK(dense::frobenius_distance(unitary_of(evolution_circuit(n, t)), expected) <
                  1e-8);
        }
    }
}

TEST_CASE("evolution is periodic in t with period 2pi/sqrt(n)") {
    Rng rng(52);
    for (int n = 1; n <= 4; ++n) {
        const double t = 2.0 * rng.next_double();
        const double period = 2.0 * M_PI / std::sqrt(static_cast<double>(n));
        CHECK(dense::frobenius_distance(unitary_of(evolution_circuit(n, t)),
                                        unitary_of(evolution_circuit(n, t + period))) < 1e-10);
    }
}

TEST_CASE("evolution circuit size is independent of t") {
    const auto a = evolution_circuit(5, 0.1);
    const auto b = evolution_circuit(5, 1234.5);
    CHECK(a.gates().size() == b.gates().size());
    CHECK_THROWS_AS(evolution_circuit(3, std::nan("")), std::invalid_argument);
    CHECK_THROWS_AS(evolution_circuit(3, INFINITY), std::invalid_argument);
}

TEST_CASE("central angle is reduced mod 4pi") {
    CHECK(evolution_central_angle(2, 0.37) ==
          doctest::Approx(2.0 * std::sqrt(2.0) * 0.37).epsilon(1e-15));
    const double big = evolution_central_angle(4, 100.0);
    CHECK(std::abs(big) < 4.0 * M_PI);
}

TEST_CASE("projectors recover every restricted operator exactly") {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= n; ++k) {
            CHECK(restricted_from_hermitian(k, n) == restricted_boundary(k, n));
        }
    }
    CHECK_THROWS_AS(restricted_from_hermitian(0, 3), std::out_of_range);
    CHECK_THROWS_AS(restricted_from_hermitian(4, 3), std::out_of_range);
}

TEST_CASE("B shifts occupancy by exactly one") {
    for (int n = 2; n <= 6; ++n) {
        const auto b = to_sparse(hermitian_boundary(n));
        for (int k = 2; k <= n; ++k) {
            CHECK((projector(k - 2, n) * b * projector(k, n)).is_zero());
        }
    }
}

TEST_CASE("dense verification paths respect the resource limit") {
    CHECK_THROWS_AS(conjugate_check(20), resource_limit_error);
    CHECK_THROWS_AS(cascade_unitary(build_cascade(20)), resource_limit_error);
}

TEST_CASE("cascade serialization round-trips") {
    const auto cascade = build_cascade(5);
    const auto parsed = RotationCascade::from_text(cascade.to_text(), 5);
    REQUIRE(parsed.steps().size() == cascade.steps().size());
    for (std::size_t i = 0; i < parsed.steps().size(); ++i) {
        CHECK(parsed.steps()[i].index == cascade.steps()[i].index);
        CHECK(parsed.steps()[i].theta == cascade.steps()[i].theta);
    }
    CHECK_THROWS_AS(RotationCascade::from_text("5 0.3", 5), std::invalid_argument);
    CHECK_THROWS_AS(RotationCascade::from_text("junk", 5), std::invalid_argument);
}
