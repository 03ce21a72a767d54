#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <wmofss/refgeom.hpp>
#include <wmofss/rng.hpp>

namespace wmofss {

using ObjectiveVector = std::vector<double>;

enum class Family { DTLZ1, DTLZ2, DTLZ3, DTLZ4 };

std::string to_string(Family family);

/// Parses "dtlz1".."dtlz4" (case-insensitive).
/// @throws std::invalid_argument on anything else
Family parse_family(std::string_view name);

/// A DTLZ instance. The decision box is [0, 1]^n with n = m + k - 1.
struct ProblemSpec {
    Family family = Family::DTLZ2;
    std::size_t m = 3;
    std::size_t k = 10;
    double alpha_bias = 100.0;

    std::size_t n() const noexcept { return m + k - 1; }

    /// Recommended distance-variable count: 5 for DTLZ1, 10 otherwise.
    static std::size_t default_k(Family family) noexcept { return family == Family::DTLZ1 ? 5 : 10; }

    static ProblemSpec make(Family family, std::size_t m);

    /// @throws std::invalid_argument if m < 2, k < 1 or alpha_bias <= 0
    void validate() const;
};

/// Writes the m objective values of `x` into `f` without allocating. Does not
/// bound-check; callers guarantee x lies in the box.
void evaluate_unchecked(const ProblemSpec &spec, std::span<const double> x, std::span<double> f);

/// @throws std::domain_error naming the first coordinate outside [0, 1]
/// @throws std::invalid_argument if x.size() != spec.n()
ObjectiveVector evaluate(const ProblemSpec &spec, std::span<const double> x);

/// Uniform random points on the analytic Pareto front.
/// @throws std::invalid_argument if count < 1
std::vector<ObjectiveVector> sample_true_pf(const ProblemSpec &spec, std::size_t count, Engine &rng);

/// Intersections of the reference directions with the analytic front.
std::vector<ObjectiveVector> pf_targets(const ProblemSpec &spec, const ReferenceSet &refs);

/// All-zeros for every DTLZ problem.
ObjectiveVector ideal_point(const ProblemSpec &spec);

} // namespace wmofss
