#include <benchmark/benchmark.h>

#include "boundaryq/cascade.hpp"
#include "boundaryq/estimation.hpp"
#include "boundaryq/fermionic.hpp"
#include "boundaryq/simplicial.hpp"
#include "boundaryq/simulator.hpp"

using namespace boundaryq;

namespace {

void BM_BoundaryOracle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_boundary_oracle(n));
    }
}
BENCHMARK(BM_BoundaryOracle)->DenseRange(6, 12, 2);

void BM_FermionicToSparse(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto sum = full_boundary_fermionic(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_sparse(sum));
    }
}
BENCHMARK(BM_FermionicToSparse)->DenseRange(6, 12, 2);

void BM_SparseNilpotencyProduct(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto d = full_boundary_oracle(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(d * d);
    }
}
BENCHMARK(BM_SparseNilpotencyProduct)->DenseRange(6, 12, 2);

void BM_EvolutionRun(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto circuit = evolution_circuit(n, 0.37);
    const auto input = StateVector::uniform_superposition(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(circuit, input));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(circuit.gates().size()));
}
BENCHMARK(BM_EvolutionRun)->DenseRange(6, 12, 2);

void BM_SamplePauli(benchmark::State& state) {
    const int n = 6;
    const auto psi = StateVector::haar_random(n, 7);
    const auto target = cascade_target_pauli(n);
    const std::uint64_t shots = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_pauli(psi, target, ShotConfig::with_shots(shots, seed++)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shots));
}
BENCHMARK(BM_SamplePauli)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_HadamardTest(benchmark::State& state) {
    const int n = 5;
    const auto psi = StateVector::haar_random(n, 7);
    const auto circuit = trotter_circuit(n, 0.05);
    const std::uint64_t shots = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            hadamard_test(circuit, psi, HadamardPart::Imag, ShotConfig::with_shots(shots, seed++)));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(shots));
}
BENCHMARK(BM_HadamardTest)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_ConjugateCheck(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(conjugate_check(n));
    }
}
BENCHMARK(BM_ConjugateCheck)->DenseRange(4, 10, 2);

} // namespace

BENCHMARK_MAIN();
