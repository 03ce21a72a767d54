#include <wmofss/refgeom.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wmofss {

ReferenceLine::ReferenceLine(std::vector<double> direction, std::size_t id)
    : direction_(std::move(direction)), norm_(0.0), id_(id)
{
    if (direction_.empty()) {
        throw std::invalid_argument("reference line direction is empty");
    }
    double sq = 0.0;
    for (double v : direction_) {
        sq += v * v;
    }
    norm_ = std::sqrt(sq);
    if (!(norm_ > 0.0) || !std::isfinite(norm_)) {
        throw std::invalid_argument("reference line " + std::to_string(id) + " has zero or non-finite norm");
    }
    unit_.resize(direction_.size());
    for (std::size_t j = 0; j < direction_.size(); ++j) {
        unit_[j] = direction_[j] / norm_;
    }
}

ReferenceSet ReferenceSet::from_points(const std::vector<std::vector<double>> &points, LayerParams layers)
{
    if (points.empty()) {
        throw std::invalid_argument("reference set needs at least one point");
    }
    ReferenceSet set;
    set.m_ = points.front().size();
    set.layers_ = layers;
    set.lines_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != set.m_) {
            throw std::invalid_argument("reference point " + std::to_string(i) + " has dimension "
                                        + std::to_string(points[i].size()) + ", expected "
                                        + std::to_string(set.m_));
        }
        set.lines_.emplace_back(points[i], i);
    }
    return set;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i is always an integer at this point
        const std::size_t factor = n - k + i;
        if (result > std::numeric_limits<std::size_t>::max() / factor) {
            throw std::overflow_error("binomial coefficient overflows");
        }
        result = result * factor / i;
    }
    return result;
}

std::size_t lattice_size(std::size_t m, int p)
{
    return binomial(static_cast<std::size_t>(p) + m - 1, m - 1);
}

namespace {

void check_lattice_args(std::size_t m, int p)
{
    if (m < 2) {
        throw std::invalid_argument("simplex lattice needs at least 2 objectives, got " + std::to_string(m));
    }
    if (p < 1) {
        throw std::invalid_argument("simplex lattice needs at least 1 division, got " + std::to_string(p));
    }
}

void enumerate(std::size_t m, int p, int remaining, std::vector<int> &counts, std::vector<ReferencePoint> &out)
{
    const std::size_t depth = counts.size();
    if (depth + 1 == m) {
        counts.push_back(remaining);
        ReferencePoint point;
        point.coords.reserve(m);
        for (int c : counts) {
            point.coords.push_back(static_cast<double>(c) / static_cast<double>(p));
        }
        out.push_back(std::move(point));
        counts.pop_back();
        return;
    }
    for (int c = remaining; c >= 0; --c) {
        counts.push_back(c);
        enumerate(m, p, remaining - c, counts, out);
        counts.pop_back();
    }
}

} // namespace

std::vector<ReferencePoint> generate_simplex_lattice(std::size_t m, int p)
{
    check_lattice_args(m, p);
    std::vector<ReferencePoint> out;
    out.reserve(lattice_size(m, p));
    std::vector<int> counts;
    counts.reserve(m);
    enumerate(m, p, p, counts, out);
    return out;
}

ReferenceSet generate_two_layer(std::size_t m, int p_outer, int p_inner)
{
    check_lattice_args(m, p_outer);
    if (p_inner < 0) {
        throw std::invalid_argument("inner layer divisions must be nonnegative, got " + std::to_string(p_inner));
    }

    std::vector<std::vector<double>> points;
    for (auto &pt : generate_simplex_lattice(m, p_outer)) {
        points.push_back(std::move(pt.coords));
    }
    if (p_inner > 0) {
        const double centroid = 1.0 / static_cast<double>(m);
        for (auto &pt : generate_simplex_lattice(m, p_inner)) {
            for (double &c : pt.coords) {
                c = 0.5 * (c + centroid);
            }
            const bool duplicate = std::any_of(points.begin(), points.end(), [&](const std::vector<double> &q) {
                for (std::size_t j = 0; j < m; ++j) {
                    if (std::abs(q[j] - pt.coords[j]) > 1e-12) {
                        return false;
                    }
                }
                return true;
            });
            if (!duplicate) {
                points.push_back(std::move(pt.coords));
            }
        }
    }
    return ReferenceSet::from_points(points, LayerParams{p_outer, p_inner});
}

LayerParams default_layers(std::size_t m, bool sbx_variant)
{
    if (m < 2) {
        throw std::invalid_argument("need at least 2 objectives");
    }
    if (!sbx_variant) {
        switch (m) {
        case 2: return {99, 0};
        case 3: return {12, 0};
        case 4: return {8, 0};
        case 5: return {6, 0};
        default: return {3, 2};
        }
    }
    switch (m) {
    case 2: return {14, 0};
    case 3: return {4, 0};
    case 4: return {3, 0};
    case 5: return {3, 0};
    default: return {2, 1};
    }
}

double perpendicular_distance(std::span<const double> w, const ReferenceLine &line)
{
    if (w.size() != line.dimension()) {
        throw std::invalid_argument("perpendicular_distance: dimension mismatch (" + std::to_string(w.size())
                                    + " vs " + std::to_string(line.dimension()) + ")");
    }
    const auto &u = line.unit();
    double proj = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        proj += w[j] * u[j];
    }
    double sq = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double r = w[j] - proj * u[j];
        sq += r * r;
    }
    return std::sqrt(sq);
}

} // namespace wmofss
