#include <wmofss/kernels.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wmofss::kernels {

int max_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void evaluate_batch(Exec exec, const ProblemSpec &spec, std::span<const std::vector<double>> xs,
                    std::span<ObjectiveVector> fs)
{
    if (xs.size() != fs.size()) {
        throw std::invalid_argument("evaluate_batch: input and output sizes differ");
    }
    for_each_index(exec, xs.size(), [&](std::size_t i) { evaluate_unchecked(spec, xs[i], fs[i]); });
}

std::vector<double> distance_matrix(Exec exec, std::span<const std::vector<double>> ws, const ReferenceSet &refs)
{
    const std::size_t cols = refs.size();
    std::vector<double> out(ws.size() * cols);
    for_each_index(exec, ws.size(), [&](std::size_t i) {
        for (std::size_t k = 0; k < cols; ++k) {
            out[i * cols + k] = perpendicular_distance(ws[i], refs[k]);
        }
    });
    return out;
}

double igd(Exec exec, const FrontSet &reference, const FrontSet &obtained)
{
    if (reference.empty() || obtained.empty()) {
        throw std::invalid_argument("igd: reference and obtained sets must be nonempty");
    }
    const std::size_t m = reference.front().size();
    for (const auto *set : {&reference, &obtained}) {
        for (const auto &p : *set) {
            if (p.size() != m) {
                throw std::invalid_argument("igd: mixed dimensions");
            }
        }
    }
    std::vector<double> nearest(reference.size());
    for_each_index(exec, reference.size(), [&](std::size_t i) {
        const auto &r = reference[i];
        double best = std::numeric_limits<double>::infinity();
        for (const auto &o : obtained) {
            double sq = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const double d = r[j] - o[j];
                sq += d * d;
            }
            best = std::min(best, sq);
        }
        nearest[i] = std::sqrt(best);
    });
    double total = 0.0;
    for (double d : nearest) {
        total += d;
    }
    return total / static_cast<double>(reference.size());
}

} // namespace wmofss::kernels
