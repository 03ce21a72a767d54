// Serial vs OpenMP paths of the hot kernels. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include <random>

#include <wmofss/kernels.hpp>
#include <wmofss/swarm.hpp>

using namespace wmofss;

namespace {

kernels::Exec exec_of(const benchmark::State &state)
{
    return state.range(0) == 0 ? kernels::Exec::Serial : kernels::Exec::Parallel;
}

std::vector<std::vector<double>> random_points(std::size_t count, std::size_t dim, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<double>> pts(count, std::vector<double>(dim));
    for (auto &p : pts) {
        for (double &v : p) {
            v = u(rng);
        }
    }
    return pts;
}

void BM_EvaluateBatch(benchmark::State &state)
{
    const auto spec = ProblemSpec::make(Family::DTLZ3, 5);
    const auto xs = random_points(1000, spec.n(), 1);
    std::vector<ObjectiveVector> fs(xs.size(), ObjectiveVector(spec.m));
    for (auto _ : state) {
        kernels::evaluate_batch(exec_of(state), spec, xs, fs);
        benchmark::DoNotOptimize(fs.data());
    }
}

void BM_DistanceMatrix(benchmark::State &state)
{
    const auto refs = generate_two_layer(5, 6, 0);
    const auto ws = random_points(420, 5, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::distance_matrix(exec_of(state), ws, refs));
    }
}

void BM_Igd(benchmark::State &state)
{
    const auto ref = random_points(10000, 5, 3);
    const auto obt = random_points(400, 5, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::igd(exec_of(state), ref, obt));
    }
}

void BM_SwarmIteration(benchmark::State &state)
{
    const auto spec = ProblemSpec::make(Family::DTLZ2, 5);
    SwarmParams params;
    params.school_size = 420;
    params.exec = exec_of(state);
    auto school = init_school(spec, params, generate_two_layer(5, 6, 0), 5);
    for (auto _ : state) {
        iterate(school);
    }
}

} // namespace

BENCHMARK(BM_EvaluateBatch)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_DistanceMatrix)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_Igd)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_SwarmIteration)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK_MAIN();
