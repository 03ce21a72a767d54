#include <wmofss/scalarize.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wmofss {

NormalizationState NormalizationState::unknown_ideal(std::size_t m)
{
    NormalizationState s;
    s.z_star.assign(m, std::numeric_limits<double>::infinity());
    s.f_max.assign(m, -std::numeric_limits<double>::infinity());
    return s;
}

NormalizationState NormalizationState::known_ideal(std::vector<double> ideal)
{
    NormalizationState s;
    s.f_max.assign(ideal.size(), -std::numeric_limits<double>::infinity());
    s.z_star = std::move(ideal);
    s.ideal_known = true;
    return s;
}

void update_bounds_inplace(NormalizationState &state, std::span<const ObjectiveVector> fs)
{
    const std::size_t m = state.objectives();
    for (const auto &f : fs) {
        if (f.size() != m) {
            throw std::invalid_argument("update_bounds: objective vector has dimension " + std::to_string(f.size())
                                        + ", expected " + std::to_string(m));
        }
    }
    for (const auto &f : fs) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!state.ideal_known) {
                state.z_star[j] = std::min(state.z_star[j], f[j]);
            }
            state.f_max[j] = std::max(state.f_max[j], f[j]);
        }
        state.observed = true;
    }
}

NormalizationState update_bounds(NormalizationState state, std::span<const ObjectiveVector> fs)
{
    update_bounds_inplace(state, fs);
    return state;
}

void normalize_into(std::span<const double> f, const NormalizationState &state, std::span<double> w)
{
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double range = state.f_max[j] - state.z_star[j];
        w[j] = range < degenerate_range ? 0.0 : (f[j] - state.z_star[j]) / range;
    }
}

WeightVector normalize(std::span<const double> f, const NormalizationState &state)
{
    if (f.size() != state.objectives()) {
        throw std::invalid_argument("normalize: dimension mismatch");
    }
    WeightVector w(f.size());
    normalize_into(f, state, w);
    return w;
}

namespace {

PbiScore pbi_unit(std::span<const double> w, std::span<const double> unit, double theta)
{
    double dot = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        dot += w[j] * unit[j];
    }
    PbiScore s;
    s.theta = theta;
    s.d1 = std::abs(dot);
    double sq = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double r = w[j] - s.d1 * unit[j];
        sq += r * r;
    }
    s.d2 = std::sqrt(sq);
    s.g = s.d1 + theta * s.d2;
    return s;
}

void check_pbi_args(std::size_t wdim, std::size_t ldim, double theta)
{
    if (wdim != ldim) {
        throw std::invalid_argument("pbi: dimension mismatch (" + std::to_string(wdim) + " vs "
                                    + std::to_string(ldim) + ")");
    }
    if (!(theta >= 0.0)) {
        throw std::invalid_argument("pbi: theta must be nonnegative");
    }
}

} // namespace

PbiScore pbi(std::span<const double> w, const ReferenceLine &line, double theta)
{
    check_pbi_args(w.size(), line.dimension(), theta);
    return pbi_unit(w, line.unit(), theta);
}

PbiScore pbi(std::span<const double> w, std::span<const double> direction, double theta)
{
    check_pbi_args(w.size(), direction.size(), theta);
    double sq = 0.0;
    for (double v : direction) {
        sq += v * v;
    }
    const double norm = std::sqrt(sq);
    if (!(norm > 0.0)) {
        throw std::invalid_argument("pbi: reference direction has zero norm");
    }
    std::vector<double> unit(direction.begin(), direction.end());
    for (double &v : unit) {
        v /= norm;
    }
    return pbi_unit(w, unit, theta);
}

double pbi_value(std::span<const double> w, const ReferenceLine &line, double theta) noexcept
{
    return pbi_unit(w, line.unit(), theta).g;
}

} // namespace wmofss
