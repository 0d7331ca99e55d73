// Serial reference vs OpenMP kernels over register size.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "bcabe/tensor/kernels.hpp"

using namespace bcabe;

namespace {

Matrix random_matrix(int n)
{
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    const Eigen::Index d = Eigen::Index{1} << n;
    Matrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c)
            m(r, c) = complex(g(rng), g(rng));
    return m;
}

Vector random_vector(int n)
{
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    Vector v(Eigen::Index{1} << n);
    for (auto& x : v)
        x = complex(g(rng), g(rng));
    return v.normalized();
}

Matrix hadamard_pair()
{
    const double s = 0.5;
    Matrix h(4, 4);
    h << s, s, s, s, s, -s, s, -s, s, s, -s, -s, s, -s, -s, s;
    return h;
}

std::uint64_t alternate_mask(int n)
{
    std::uint64_t mask = 0;
    for (int q = 0; q < n; q += 2)
        mask |= std::uint64_t{1} << q;
    return mask;
}

template <bool Parallel>
void bm_partial_transpose(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Matrix m = random_matrix(n);
    const auto mask = alternate_mask(n);
    for (auto _ : state) {
        Matrix out = Parallel ? kernels::partial_transpose(m, n, mask) : kernels::serial::partial_transpose(m, n, mask);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void bm_partial_trace(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Matrix m = random_matrix(n);
    const auto mask = alternate_mask(n);
    for (auto _ : state) {
        Matrix out = Parallel ? kernels::partial_trace(m, n, mask) : kernels::serial::partial_trace(m, n, mask);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void bm_apply_left(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Matrix base = random_matrix(n);
    const Matrix u = hadamard_pair();
    const std::vector<int> pos{1, n};
    for (auto _ : state) {
        Matrix m = base;
        if constexpr (Parallel)
            kernels::apply_left(m, n, u, pos);
        else
            kernels::serial::apply_left(m, n, u, pos);
        benchmark::DoNotOptimize(m.data());
    }
}

template <bool Parallel>
void bm_permute(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Matrix m = random_matrix(n);
    std::vector<int> order;
    for (int q = n; q >= 1; --q)
        order.push_back(q);
    for (auto _ : state) {
        Matrix out = Parallel ? kernels::permute_qubits(m, n, order) : kernels::serial::permute_qubits(m, n, order);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void bm_accumulate_outer(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Vector psi = random_vector(n);
    const Eigen::Index d = psi.size();
    Matrix acc = Matrix::Zero(d, d);
    for (auto _ : state) {
        if constexpr (Parallel)
            kernels::accumulate_outer(acc, psi, 0.5);
        else
            kernels::serial::accumulate_outer(acc, psi, 0.5);
        benchmark::DoNotOptimize(acc.data());
    }
}

template <bool Parallel>
void bm_expectation(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const Matrix m = random_matrix(n);
    const Vector psi = random_vector(n);
    for (auto _ : state) {
        const double e = Parallel ? kernels::expectation(m, psi) : kernels::serial::expectation(m, psi);
        benchmark::DoNotOptimize(e);
    }
}

} // namespace

#define BCABE_BENCH_PAIR(fn)                                                                                  \
    BENCHMARK(fn<false>)->Name(#fn "/serial")->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond);            \
    BENCHMARK(fn<true>)->Name(#fn "/openmp")->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond)

BCABE_BENCH_PAIR(bm_partial_transpose);
BCABE_BENCH_PAIR(bm_partial_trace);
BCABE_BENCH_PAIR(bm_apply_left);
BCABE_BENCH_PAIR(bm_permute);
BCABE_BENCH_PAIR(bm_accumulate_outer);
BCABE_BENCH_PAIR(bm_expectation);

BENCHMARK_MAIN();
