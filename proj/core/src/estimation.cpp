#include "boundaryq/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "boundaryq/cascade.hpp"
#include "boundaryq/fermionic.hpp"
#include "boundaryq/rng.hpp"

namespace boundaryq {

namespace {

double median(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t count = values.size();
    if (count == 0) {
        return 0.0;
    }
    if (count % 2 == 1) {
        return values[count / 2];
    }
    return 0.5 * (values[count / 2 - 1] + values[count / 2]);
}

Estimate estimate_b(const std::string& method, const StateVector& state, double t,
                    const ShotConfig& cfg) {
    if (method == "analytic") {
        return analytic_estimate(state, cfg);
    }
    return trotter_estimate(state, t, cfg);
}

// Runs body(j) for j = 0..count-1 across a small thread pool. Results must
// be written to preassigned slots; the reduce stays deterministic because
// scheduling never changes who writes where.
void parallel_shards(int count, int threads, const std::function<void(int)>& body) {
    int workers = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    workers = std::max(1, std::min(workers, count));
    if (workers == 1) {
        for (int j = 0; j < count; ++j) {
            body(j);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (int j = w; j < count; j += workers) {
                body(j);
            }
        });
    }
    for (auto& worker : pool) {
        worker.join();
    }
}

} // namespace

Estimate analytic_estimate(const StateVector& state, const ShotConfig& cfg) {
    const int n = state.n();
    const double scale = std::sqrt(static_cast<double>(n));
    Circuit rotate(n);
    rotate.append(cascade_gates(build_cascade(n)));
    const StateVector rotated = run(rotate, state);
    Estimate est = sample_pauli(rotated, cascade_target_pauli(n), cfg);
    est.value *= scale;
    est.std_error *= scale;
    return est;
}

Circuit trotter_circuit(int n, double t) {
    if (!std::isfinite(t)) {
        throw std::invalid_argument("trotter time must be finite");
    }
    Circuit circuit(n);
    for (int i = 0; i < n; ++i) {
        // e^{-i Q_i t} = exp(+i Q_i (-2t)/2)
        circuit.append(compile_pauli_exponential(hermitian_term(i, n), -2.0 * t));
    }
    return circuit;
}

Estimate trotter_estimate(const StateVector& state, double t, const ShotConfig& cfg) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("trotter estimate requires t > 0");
    }
    const Circuit circuit = trotter_circuit(state.n(), t);
    Estimate est = hadamard_test(circuit, state, HadamardPart::Imag, cfg);
    est.value = -est.value / t;
    est.std_error = est.std_error / t;
    return est;
}

std::vector<CatalogState> state_catalog(int n, std::uint64_t seed) {
    std::vector<CatalogState> catalog;
    catalog.push_back({"zeros", StateVector::zero_state(n)});
    catalog.push_back({"uniform", StateVector::uniform_superposition(n)});
    catalog.push_back({"haar", StateVector::haar_random(n, derive_seed(seed, 0x57A7Eull))});
    return catalog;
}

StateVector catalog_state(const std::string& name, int n, std::uint64_t seed) {
    for (auto& entry : state_catalog(n, seed)) {
        if (entry.name == name) {
            return entry.state;
        }
    }
    throw std::invalid_argument("unknown catalog state '" + name + "'");
}

ScalingReport scaling_experiment(const ScalingConfig& config) {
    if (config.n < 1) {
        throw std::invalid_argument("scaling experiment requires n >= 1");
    }
    if (config.num_seeds < 1 || config.eps_grid.empty()) {
        throw std::invalid_argument("scaling experiment needs seeds and a target grid");
    }
    const StateVector state = catalog_state(config.state, config.n, config.master_seed);
    const double exact = expectation(state, hermitian_boundary(config.n)).real();

    ScalingReport report;
    const std::vector<std::string> methods = {"analytic", "trotter"};
    for (std::size_t m = 0; m < methods.size(); ++m) {
        const std::string& method = methods[m];
        for (std::size_t ei = 0; ei < config.eps_grid.size(); ++ei) {
            const double eps = config.eps_grid[ei];
            const double t = method == "trotter" ? eps / static_cast<double>(config.n) : 0.0;

            const Estimate exact_mode = estimate_b(method, state, t, ShotConfig::exact_mode());
            const double bias = exact_mode.value - exact;

            ScalingRow row;
            row.method = method;
            row.n = config.n;
            row.t = t;
            row.eps = eps;
            row.bias = bias;

            std::uint64_t shots = config.base_shots;
            int rung = 0;
            std::vector<Estimate> estimates(static_cast<std::size_t>(config.num_seeds));
            while (true) {
                // Rung-independent sub-seeds: each shard follows one shot
                // stream as N grows (common random numbers), so the first
                // crossing is not driven by per-rung re-rolls.
                parallel_shards(config.num_seeds, config.threads, [&](int j) {
                    const std::uint64_t seed = derive_seed(config.master_seed, m + 1, ei + 1,
                                                           static_cast<std::uint64_t>(j));
                    estimates[static_cast<std::size_t>(j)] =
                        estimate_b(method, state, t, ShotConfig::with_shots(shots, seed));
                });
                std::vector<double> deviations;
                std::vector<double> errors;
                deviations.reserve(estimates.size());
                errors.reserve(estimates.size());
                for (const auto& est : estimates) {
                    deviations.push_back(std::abs(est.value - exact_mode.value));
                    errors.push_back(est.std_error);
                }
                row.shots = shots;
                row.std_error = median(errors);
                row.total_error = std::abs(bias) + median(deviations);
                if (row.total_error <= eps) {
                    break;
                }
                if (shots >= config.shot_cap) {
                    row.capped = true;
                    break;
                }
                ++rung;
                const double next = std::round(static_cast<double>(config.base_shots) *
                                               std::pow(config.ladder_ratio, rung));
                shots = std::min(config.shot_cap,
                                 std::max(shots + 1, static_cast<std::uint64_t>(next)));
            }
            report.rows.push_back(std::move(row));
        }
    }

    auto fit_for = [&](const std::string& method) {
        std::vector<double> inv_eps;
        std::vector<double> shots;
        for (const auto& row : report.rows) {
            if (row.method == method && !row.capped) {
                inv_eps.push_back(1.0 / row.eps);
                shots.push_back(static_cast<double>(row.shots));
            }
        }
        return fit_loglog_exponent(inv_eps, shots);
    };
    report.analytic_exponent = fit_for("analytic");
    report.trotter_exponent = fit_for("trotter");
    return report;
}

double fit_loglog_exponent(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    const double count = static_cast<double>(x.size());
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

std::string ScalingReport::to_tsv() const {
    std::string out = "method\tn\tt\teps\tshots\tbias\tstderr\ttotal_error\tcapped\n";
    for (const auto& row : rows) {
        out += row.method;
        out += '\t';
        out += std::to_string(row.n);
        out += '\t';
        out += format_double(row.t);
        out += '\t';
        out += format_double(row.eps);
        out += '\t';
        out += std::to_string(row.shots);
        out += '\t';
        out += format_double(row.bias);
        out += '\t';
        out += format_double(row.std_error);
        out += '\t';
        out += format_double(row.total_error);
        out += '\t';
        out += row.capped ? "1" : "0";
        out += '\n';
    }
    return out;
}

std::string ScalingReport::summary() const {
    std::string out;
    out += "analytic_exponent " + format_double(analytic_exponent) + "\n";
    out += "trotter_exponent " + format_double(trotter_exponent) + "\n";
    out += std::string("shot_ratio_monotone ") + (shot_ratio_monotone() ? "yes" : "no") + "\n";
    for (const auto& row : rows) {
        if (row.capped) {
            out += "capped " + row.method + " eps " + format_double(row.eps) + "\n";
        }
    }
    return out;
}

std::string ScalingReport::plot_data(const std::string& method) const {
    std::string out;
    for (const auto& row : rows) {
        if (row.method == method) {
            out += format_double(1.0 / row.eps);
            out += ' ';
            out += std::to_string(row.shots);
            out += '\n';
        }
    }
    return out;
}

bool ScalingReport::shot_ratio_monotone() const {
    // Rows are ordered analytic-first then trotter, same eps order.
    std::vector<double> ratios;
    for (const auto& trotter_row : rows) {
        if (trotter_row.method != "trotter") {
            continue;
        }
        for (const auto& analytic_row : rows) {
            if (analytic_row.method == "analytic" && analytic_row.eps == trotter_row.eps) {
                ratios.push_back(static_cast<double>(trotter_row.shots) /
                                 static_cast<double>(analytic_row.shots));
            }
        }
    }
    if (ratios.size() < 2) {
        return false;
    }
    for (std::size_t i = 1; i < ratios.size(); ++i) {
        if (!(ratios[i] > ratios[i - 1])) {
            return false;
        }
    }
    return true;
}

} // namespace boundaryq
