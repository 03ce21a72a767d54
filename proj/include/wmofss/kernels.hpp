#pragma once

// Data-parallel inner loops. Every kernel has a serial path and an OpenMP path
// that produce bitwise-identical results: work items are independent and any
// reduction is finished serially in index order.

#include <cstddef>
#include <span>
#include <vector>

#include <wmofss/metrics.hpp>
#include <wmofss/problems.hpp>
#include <wmofss/refgeom.hpp>

namespace wmofss::kernels {

enum class Exec { Serial, Parallel };

/// Number of threads the parallel path would use (1 without OpenMP).
int max_threads() noexcept;

/// Calls fn(i) for i in [0, n). Iterations must not share mutable state.
template <class Fn>
void for_each_index(Exec exec, std::size_t n, Fn &&fn)
{
    const auto count = static_cast<long long>(n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < count; ++i) {
            fn(static_cast<std::size_t>(i));
        }
    } else {
        for (long long i = 0; i < count; ++i) {
            fn(static_cast<std::size_t>(i));
        }
    }
}

/// fs[i] = f(xs[i]). fs must be presized to m entries each.
void evaluate_batch(Exec exec, const ProblemSpec &spec, std::span<const std::vector<double>> xs,
                    std::span<ObjectiveVector> fs);

/// Row-major |ws| x |refs| matrix of perpendicular distances.
std::vector<double> distance_matrix(Exec exec, std::span<const std::vector<double>> ws, const ReferenceSet &refs);

/// IGD with the per-reference-point minima computed in parallel.
double igd(Exec exec, const FrontSet &reference, const FrontSet &obtained);

} // namespace wmofss::kernels
