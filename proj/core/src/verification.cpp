#include "boundaryq/verification.hpp"

#include <cmath>

#include "boundaryq/cascade.hpp"
#include "boundaryq/dense.hpp"
#include "boundaryq/fermionic.hpp"
#include "boundaryq/rng.hpp"
#include "boundaryq/simplicial.hpp"

namespace boundaryq {

namespace {

IdentityResult check(const std::string& identity, int n, bool pass, std::string detail = "") {
    return {identity, n, pass, std::move(detail)};
}

std::string residual_text(double value) {
    return "residual " + format_double(value);
}

} // namespace

std::vector<IdentityResult> run_identity_suite(const VerifyOptions& options) {
    std::vector<IdentityResult> results;
    for (int n = 1; n <= options.n_max; ++n) {
        const SparseOperator oracle = full_boundary_oracle(n);
        const SparseOperator fermionic = to_sparse(full_boundary_fermionic(n));
        const SparseOperator recurrence = full_boundary_recurrence(n);
        results.push_back(check("three_way_equality", n,
                                fermionic == oracle && recurrence == oracle,
                                "fermionic/recurrence/oracle"));

        results.push_back(check("nilpotency", n, (oracle * oracle).is_zero(), "d*d = 0"));

        // {sigma_z^n, d} = 0
        OperatorSum parity(n);
        parity.add_term(1.0, PauliString::from_word(std::string(static_cast<std::size_t>(n), 'Z')));
        const SparseOperator zs = to_sparse(parity.canonicalize());
        results.push_back(check("parity_anticommutation", n,
                                (zs * oracle + oracle * zs).is_zero(), "{Z...Z, d} = 0"));

        bool pairwise = true;
        for (int i = 0; i < n && pairwise; ++i) {
            for (int j = 0; j < n && pairwise; ++j) {
                const bool expected = i != j;
                if (anticommutes(hermitian_term(i, n), hermitian_term(j, n)) != expected) {
                    pairwise = false;
                }
            }
        }
        results.push_back(check("qi_pairwise_anticommutation", n, pairwise, "{Q_i, Q_j} = 0"));

        const double residual =
            options.perturb_cascade_angle != 0.0
                ? conjugate_check_perturbed(n, 0, options.perturb_cascade_angle)
                : conjugate_check(n);
        results.push_back(check("conjugate_check", n, residual <= 1e-10, residual_text(residual)));

        bool projector_ok = true;
        const SparseOperator b = to_sparse(hermitian_boundary(n));
        for (int k = 1; k <= n; ++k) {
            if (!(restricted_from_hermitian(k, n) == restricted_boundary(k, n))) {
                projector_ok = false;
            }
        }
        results.push_back(
            check("projector_reconstruction", n, projector_ok, "P_{k-1} B P_k = d_k"));

        if (n <= options.evolution_n_max) {
            Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(n)));
            const Eigen::MatrixXcd b_dense = b.to_dense();
            double worst = 0.0;
            for (int trial = 0; trial < 3; ++trial) {
                const double t = 2.0 * M_PI * rng.next_double();
                const Eigen::MatrixXcd expected =
                    dense::expm(complexd{0.0, -t} * b_dense);
                const Eigen::MatrixXcd actual = unitary_of(evolution_circuit(n, t));
                worst = std::max(worst, dense::frobenius_distance(actual, expected));
            }
            results.push_back(
                check("evolution_identity", n, worst <= 1e-8, residual_text(worst)));
        }
    }
    return results;
}

bool all_passed(const std::vector<IdentityResult>& results) {
    for (const auto& result : results) {
        if (!result.pass) {
            return false;
        }
    }
    return true;
}

} // namespace boundaryq
