#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boundaryq/cascade.hpp"
#include "boundaryq/estimation.hpp"
#include "boundaryq/fermionic.hpp"
#include "boundaryq/simplicial.hpp"
#include "boundaryq/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file " + path);
    }
    out << content;
}

int cmd_build(int n, const std::string& which, const std::string& out_path) {
    std::string content = "# boundaryq build n=" + std::to_string(n) + " which=" + which + "\n";
    if (which == "fermionic") {
        content += boundaryq::full_boundary_fermionic(n).to_text();
    } else if (which == "hermitian") {
        content += boundaryq::hermitian_boundary(n).to_text();
    } else if (which == "oracle") {
        content += boundaryq::full_boundary_oracle(n).to_text();
    } else if (which == "recurrence") {
        content += boundaryq::full_boundary_recurrence(n).to_text();
    } else {
        std::cerr << "unknown operator '" << which << "'\n";
        return kExitUsage;
    }
    write_output(out_path, content);
    return kExitOk;
}

int cmd_verify(int n_max, double perturb) {
    boundaryq::VerifyOptions options;
    options.n_max = n_max;
    options.perturb_cascade_angle = perturb;
    const auto results = boundaryq::run_identity_suite(options);

    std::printf("%-2s  %-28s  %-4s  %s\n", "n", "identity", "ok", "detail");
    for (const auto& result : results) {
        std::printf("%-2d  %-28s  %-4s  %s\n", result.n, result.identity.c_str(),
                    result.pass ? "PASS" : "FAIL", result.detail.c_str());
    }
    if (boundaryq::all_passed(results)) {
        std::printf("overall: PASS (%zu checks)\n", results.size());
        return kExitOk;
    }
    for (const auto& result : results) {
        if (!result.pass) {
            std::printf("overall: FAIL (%s at n=%d)\n", result.identity.c_str(), result.n);
            break;
        }
    }
    return kExitVerifyFailed;
}

int cmd_emit(int n, const std::string& target, double t, std::string out_path) {
    boundaryq::Circuit circuit(1);
    std::string header;
    if (target == "analytic") {
        auto scaled = boundaryq::analytic_boundary_circuit(n);
        circuit = scaled.circuit;
        header = "# analytic boundary circuit, n=" + std::to_string(n) +
                 ", scale=" + boundaryq::format_double(scaled.scale) + "\n";
    } else if (target == "evolution") {
        circuit = boundaryq::evolution_circuit(n, t);
        header = "# evolution circuit, n=" + std::to_string(n) +
                 ", t=" + boundaryq::format_double(t) + "\n# central-angle " +
                 boundaryq::format_double(boundaryq::evolution_central_angle(n, t)) + "\n";
    } else {
        std::cerr << "unknown target '" << target << "'\n";
        return kExitUsage;
    }
    if (out_path.empty()) {
        out_path = target + "_n" + std::to_string(n) + ".bqc";
    }
    write_output(out_path, header + boundaryq::emit_text(circuit));
    const auto counts = boundaryq::depth_and_counts(circuit);
    std::printf("wrote %s: qubits %d, gates %d, depth %d, two-qubit rotations %d\n",
                out_path.c_str(), circuit.total_qubits(), counts.total_gates, counts.depth,
                counts.two_qubit_rotations);
    return kExitOk;
}

int cmd_simulate(int n, const std::string& method, const std::string& state_name, double t,
                 std::uint64_t shots, std::uint64_t seed, bool exact,
                 const std::string& out_path) {
    const auto state = boundaryq::catalog_state(state_name, n, seed);
    const auto cfg = exact ? boundaryq::ShotConfig::exact_mode()
                           : boundaryq::ShotConfig::with_shots(shots, seed);
    boundaryq::Estimate est;
    std::string label;
    if (method == "analytic") {
        est = boundaryq::analytic_estimate(state, cfg);
        label = "analytic_B";
    } else if (method == "trotter") {
        est = boundaryq::trotter_estimate(state, t, cfg);
        label = "trotter_B";
    } else {
        std::cerr << "unknown method '" << method << "'\n";
        return kExitUsage;
    }
    const double exact_b =
        boundaryq::expectation(state, boundaryq::hermitian_boundary(n)).real();

    std::ostringstream rows;
    rows << label << '\t' << boundaryq::format_double(est.value) << '\t'
         << boundaryq::format_double(est.std_error) << '\t' << est.shots << '\t' << seed << '\n';
    rows << "exact_B\t" << boundaryq::format_double(exact_b) << "\t0\t0\t" << seed << '\n';
    write_output(out_path, rows.str());
    return kExitOk;
}

int cmd_bench(int n, std::vector<double> eps, int seeds, std::uint64_t seed,
              const std::string& state_name, std::uint64_t shot_cap,
              const std::string& out_path, const std::string& plot_prefix) {
    boundaryq::ScalingConfig config;
    config.n = n;
    if (!eps.empty()) {
        config.eps_grid = std::move(eps);
    }
    config.num_seeds = seeds;
    config.master_seed = seed;
    config.state = state_name;
    if (shot_cap > 0) {
        config.shot_cap = shot_cap;
    }
    const auto report = boundaryq::scaling_experiment(config);
    write_output(out_path, report.to_tsv());
    std::cout << report.summary();
    if (!plot_prefix.empty()) {
        write_output(plot_prefix + "_analytic.dat", report.plot_data("analytic"));
        write_output(plot_prefix + "_trotter.dat", report.plot_data("trotter"));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundaryq: fermionic boundary operators, unitary-partitioning circuits, "
                 "simulation, and scaling studies"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Construct a boundary operator and serialize it");
    int build_n = 2;
    std::string build_which = "oracle";
    std::string build_out;
    build->add_option("--n", build_n, "qubit/vertex count")->required();
    build->add_option("--which", build_which, "fermionic|oracle|recurrence|hermitian")->required();
    build->add_option("--out", build_out, "output file (default: stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the identity suite for n = 1..n-max");
    int verify_n_max = 6;
    double verify_perturb = 0.0;
    verify->add_option("--n-max", verify_n_max, "largest qubit count")->required()
        ->check(CLI::Range(1, 10));
    verify->add_option("--debug-perturb-cascade", verify_perturb,
                       "fault injection: offset added to one cascade angle");

    // emit
    auto* emit = app.add_subcommand("emit", "Compile a circuit and write .bqc text");
    int emit_n = 2;
    std::string emit_target = "analytic";
    double emit_t = 0.0;
    std::string emit_out;
    emit->add_option("--n", emit_n, "qubit count")->required();
    emit->add_option("--target", emit_target, "analytic|evolution")->required();
    emit->add_option("--t", emit_t, "evolution time (evolution target only)");
    emit->add_option("--out", emit_out, "output file (default: <target>_n<N>.bqc)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Estimate <B> on a catalog state");
    int sim_n = 2;
    std::string sim_method = "analytic";
    std::string sim_state = "zeros";
    double sim_t = 0.1;
    std::uint64_t sim_shots = 1024;
    std::uint64_t sim_seed = 0;
    bool sim_exact = false;
    std::string sim_out;
    simulate->add_option("--n", sim_n, "qubit count")->required();
    simulate->add_option("--method", sim_method, "analytic|trotter")->required();
    simulate->add_option("--state", sim_state, "zeros|uniform|haar");
    simulate->add_option("--t", sim_t, "trotter time step");
    simulate->add_option("--shots", sim_shots, "shot count");
    simulate->add_option("--seed", sim_seed, "rng seed")->required();
    simulate->add_flag("--exact", sim_exact, "infinite-shot exact mode");
    simulate->add_option("--out", sim_out, "output file (default: stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "Shot-scaling study: analytic vs trotter");
    int bench_n = 4;
    std::vector<double> bench_eps;
    int bench_seeds = 1024;
    std::uint64_t bench_seed = 0;
    std::string bench_state = "haar";
    std::uint64_t bench_cap = 0;
    std::string bench_out;
    std::string bench_plot;
    bench->add_option("--n", bench_n, "qubit count")->required();
    bench->add_option("--eps", bench_eps, "target accuracies (descending)")->delimiter(',');
    bench->add_option("--seeds", bench_seeds, "seed shards per cell");
    bench->add_option("--seed", bench_seed, "master seed")->required();
    bench->add_option("--state", bench_state, "zeros|uniform|haar");
    bench->add_option("--shot-cap", bench_cap, "largest shot count tried");
    bench->add_option("--out", bench_out, "TSV output file (default: stdout)");
    bench->add_option("--plot-prefix", bench_plot, "write <prefix>_<method>.dat plot files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (build->parsed()) {
            return cmd_build(build_n, build_which, build_out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_n_max, verify_perturb);
        }
        if (emit->parsed()) {
            return cmd_emit(emit_n, emit_target, emit_t, emit_out);
        }
        if (simulate->parsed()) {
            return cmd_simulate(sim_n, sim_method, sim_state, sim_t, sim_shots, sim_seed,
                                sim_exact, sim_out);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_n, bench_eps, bench_seeds, bench_seed, bench_state, bench_cap,
                             bench_out, bench_plot);
        }
    } catch (const boundaryq::resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
