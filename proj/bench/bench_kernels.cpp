// Serial reference against the OpenMP kernels. Set OMP_NUM_THREADS to vary
// the thread count; with one thread the pair measures the OpenMP overhead.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "tfn/kernels.hpp"
#include "tfn/sampling.hpp"

namespace {

using namespace fuzzy;

std::vector<double> grid(std::size_t n) {
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = std::lerp(-1.0, 3.0, static_cast<double>(i) / (n - 1));
    return ys;
}

std::vector<Tfn> batch(std::size_t n) {
    TfnSampler s(42);
    std::vector<Tfn> xs(n);
    for (auto& x : xs) x = s.next();
    return xs;
}

template <auto Kernel>
void BM_sup_min(benchmark::State& state) {
    const auto ys = grid(static_cast<std::size_t>(state.range(0)));
    const Tfn P = make_tfn(0, 1, 2), Q = make_tfn(1, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(P, Q, -1.0, 3.0, ys));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_alpha_cuts(benchmark::State& state) {
    const auto xs = batch(static_cast<std::size_t>(state.range(0)));
    std::vector<Interval> out(xs.size());
    for (auto _ : state) {
        Kernel(xs, 0.5, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_classify(benchmark::State& state) {
    const auto xs = batch(static_cast<std::size_t>(state.range(0)));
    std::vector<SignClass> out(xs.size());
    for (auto _ : state) {
        Kernel(xs, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

constexpr auto kSizes = {1 << 10, 1 << 14, 1 << 18};

void sizes(benchmark::internal::Benchmark* b) {
    for (const int n : kSizes) b->Arg(n);
}

BENCHMARK(BM_sup_min<kernels::serial::sup_min_affine>)->Name("sup_min/serial")->Apply(sizes);
BENCHMARK(BM_sup_min<kernels::omp::sup_min_affine>)->Name("sup_min/omp")->Apply(sizes);
BENCHMARK(BM_alpha_cuts<kernels::serial::alpha_cuts>)->Name("alpha_cuts/serial")->Apply(sizes);
BENCHMARK(BM_alpha_cuts<kernels::omp::alpha_cuts>)->Name("alpha_cuts/omp")->Apply(sizes);
BENCHMARK(BM_classify<kernels::serial::classify>)->Name("classify/serial")->Apply(sizes);
BENCHMARK(BM_classify<kernels::omp::classify>)->Name("classify/omp")->Apply(sizes);

}  // namespace

BENCHMARK_MAIN();
