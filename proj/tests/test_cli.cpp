#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "boundaryq/cascade.hpp"
#include "boundaryq/dense.hpp"
#include "boundaryq/fermionic.hpp"

#include "support/paper_matrices.hpp"

using namespace boundaryq;

namespace {

struct CommandResult {
    int exit_code;
    std::string output; // stdout + stderr
};

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "boundaryq_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

CommandResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const auto capture = scratch_dir() / ("out_" + std::to_string(counter++) + ".txt");
    const std::string command = env_prefix + std::string(BOUNDARYQ_CLI_PATH) + " " + args +
                                " > " + capture.string() + " 2>&1";
    const int status = std::system(command.c_str());
    std::ifstream in(capture);
    std::stringstream buffer;
    buffer << in.rdbuf();
    int code = -1;
    if (WIFEXITED(status)) {
        code = WEXITSTATUS(status);
    }
    return {code, buffer.str()};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("build emits the worked matrices") {
    for (int n = 1; n <= 3; ++n) {
        for (const std::string which : {"oracle", "recurrence"}) {
            const auto out = scratch_dir() / ("build_" + which + std::to_string(n) + ".txt");
            const auto result =
                run_cli("build --n " + std::to_string(n) + " --which " + which + " --out " +
                        out.string());
            REQUIRE(result.exit_code == 0);
            const auto parsed = SparseOperator::from_text(slurp(out), n);
            CHECK(parsed.to_dense() == testsupport::boundary_matrix(n));
        }
        const auto out = scratch_dir() / ("build_fermionic" + std::to_string(n) + ".txt");
        REQUIRE(run_cli("build --n " + std::to_string(n) + " --which fermionic --out " +
                        out.string())
                    .exit_code == 0);
        const auto sum = OperatorSum::from_text(slurp(out), n);
        CHECK(to_sparse(sum).to_dense() == testsupport::boundary_matrix(n));
    }
}

TEST_CASE("build hermitian n=1 prints the single term") {
    const auto result = run_cli("build --n 1 --which hermitian");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("1 0 X\n") != std::string::npos);
}

TEST_CASE("verify passes and exit codes are stable") {
    auto result = run_cli("verify --n-max 3");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("overall: PASS") != std::string::npos);

    result = run_cli("verify --n-max 1");
    CHECK(result.exit_code == 0);

    result = run_cli("verify --n-max 3 --debug-perturb-cascade 0.05");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("overall: FAIL (conjugate_check") != std::string::npos);
}

TEST_CASE("emit writes parseable circuits with the advertised counts") {
    const auto analytic = scratch_dir() / "analytic3.bqc";
    auto result = run_cli("emit --n 3 --target analytic --out " + analytic.string());
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("two-qubit rotations 4") != std::string::npos);

    const std::string text = slurp(analytic);
    int rz_lines = 0;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind("rz ", 0) == 0) ++rz_lines;
    }
    CHECK(rz_lines == 4);

    const auto circuit = parse_text(text);
    CHECK(dense::frobenius_distance(std::sqrt(3.0) * unitary_of(circuit),
                                    to_sparse(hermitian_boundary(3)).to_dense()) < 1e-10);

    const auto n1 = scratch_dir() / "analytic1.bqc";
    REQUIRE(run_cli("emit --n 1 --target analytic --out " + n1.string()).exit_code == 0);
    CHECK(slurp(n1).find("x 0\n") != std::string::npos);
}

TEST_CASE("emitted evolution circuit records the reduced central angle") {
    const auto path = scratch_dir() / "evolution2.bqc";
    const auto result =
        run_cli("emit --n 2 --target evolution --t 0.37 --out " + path.string());
    REQUIRE(result.exit_code == 0);
    const std::string text = slurp(path);
    const std::string expected_angle = format_double(2.0 * std::sqrt(2.0) * 0.37);
    CHECK(text.find("# central-angle " + expected_angle) != std::string::npos);

    const auto circuit = parse_text(text);
    CHECK(dense::frobenius_distance(unitary_of(circuit), testsupport::evolution_n2(0.37)) <
          1e-10);
}

TEST_CASE("simulate is reproducible from argv and seed") {
    const auto a = scratch_dir() / "sim_a.tsv";
    const auto b = scratch_dir() / "sim_b.tsv";
    const std::string args =
        "simulate --n 3 --method analytic --state haar --shots 4096 --seed 99 --out ";
    REQUIRE(run_cli(args + a.string()).exit_code == 0);
    REQUIRE(run_cli(args + b.string()).exit_code == 0);
    const auto text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(text.find("analytic_B\t") != std::string::npos);
    CHECK(text.find("exact_B\t") != std::string::npos);

    const auto exact = run_cli("simulate --n 2 --method trotter --t 0.05 --state uniform "
                               "--exact --seed 1");
    CHECK(exact.exit_code == 0);
    CHECK(exact.output.find("trotter_B\t") != std::string::npos);
}

TEST_CASE("bench runs are byte-identical under a fixed master seed") {
    const auto a = scratch_dir() / "bench_a.tsv";
    const auto b = scratch_dir() / "bench_b.tsv";
    const std::string args = "bench --n 2 --eps 0.4,0.2 --seeds 4 --seed 5 --out ";
    auto first = run_cli(args + a.string());
    REQUIRE(first.exit_code == 0);
    CHECK(first.output.find("analytic_exponent") != std::string::npos);
    auto second = run_cli(args + b.string());
    REQUIRE(second.exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(first.output == second.output);

    const auto plotted = run_cli("bench --n 2 --eps 0.4,0.2 --seeds 2 --seed 5 --out " +
                                 (scratch_dir() / "bench_c.tsv").string() + " --plot-prefix " +
                                 (scratch_dir() / "bench").string());
    CHECK(plotted.exit_code == 0);
    CHECK(std::filesystem::exists(scratch_dir() / "bench_analytic.dat"));
    CHECK(std::filesystem::exists(scratch_dir() / "bench_trotter.dat"));
}

TEST_CASE("usage and resource errors exit with code 2") {
    CHECK(run_cli("build --n 15 --which oracle").exit_code == 2);
    CHECK(run_cli("build --n 3 --which nonsense").exit_code == 2);
    CHECK(run_cli("emit --n 3 --target nonsense").exit_code == 2);
    CHECK(run_cli("simulate --n 2 --method trotter --t -1 --seed 4 --exact").exit_code == 2);
    CHECK(run_cli("simulate --n 2 --method analytic --shots 10").exit_code == 2); // no seed
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("verify --n-max 99").exit_code == 2);
    CHECK(run_cli("build --n 5 --which oracle", "BOUNDARYQ_DENSE_LIMIT=4 ").exit_code == 2);
    CHECK(run_cli("build --n 5 --which oracle", "BOUNDARYQ_DENSE_LIMIT=6 ").exit_code == 0);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("build --help").exit_code == 0);
}
