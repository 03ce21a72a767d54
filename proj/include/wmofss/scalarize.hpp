#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <wmofss/problems.hpp>
#include <wmofss/refgeom.hpp>

namespace wmofss {

using WeightVector = std::vector<double>;

/// Adaptive normalization bounds: running ideal estimate (or the known ideal)
/// and running per-objective maxima standing in for the nadir point.
struct NormalizationState {
    std::vector<double> z_star;
    std::vector<double> f_max;
    bool ideal_known = false;
    bool observed = false;

    /// Running ideal and running maxima, nothing observed yet.
    static NormalizationState unknown_ideal(std::size_t m);
    /// Fixed ideal; only f_max adapts.
    static NormalizationState known_ideal(std::vector<double> ideal);

    std::size_t objectives() const noexcept { return f_max.size(); }
};

/// Componentwise min/max update. Never loosens a bound.
/// @throws std::invalid_argument on dimension mismatch
NormalizationState update_bounds(NormalizationState state, std::span<const ObjectiveVector> fs);

/// In-place variant used by the main loop.
void update_bounds_inplace(NormalizationState &state, std::span<const ObjectiveVector> fs);

/// Ranges narrower than this map the coordinate to zero.
inline constexpr double degenerate_range = 1e-12;

/// w_j = (f_j - z*_j) / (f_max_j - z*_j).
WeightVector normalize(std::span<const double> f, const NormalizationState &state);
void normalize_into(std::span<const double> f, const NormalizationState &state, std::span<double> w);

struct PbiScore {
    double d1 = 0.0;
    double d2 = 0.0;
    double g = 0.0;
    double theta = 0.0;
};

/// Penalty-based boundary intersection of `w` against a reference line.
/// @throws std::invalid_argument on dimension mismatch or theta < 0
PbiScore pbi(std::span<const double> w, const ReferenceLine &line, double theta);

/// Same, against a raw direction.
/// @throws std::invalid_argument if the direction has zero norm
PbiScore pbi(std::span<const double> w, std::span<const double> direction, double theta);

/// Allocation-free aggregated weight d1 + theta * d2 with no argument checks.
double pbi_value(std::span<const double> w, const ReferenceLine &line, double theta) noexcept;

/// Intra-cluster dominance on aggregated weight: same cluster and strictly smaller.
constexpr bool theta_star_dominates(std::size_t cluster_i, double w_bar_i, std::size_t cluster_j,
                                    double w_bar_j) noexcept
{
    return cluster_i == cluster_j && w_bar_i < w_bar_j;
}

} // namespace wmofss
