#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wmofss {

/// A point on the unit simplex: nonnegative coordinates summing to one.
struct ReferencePoint {
    std::vector<double> coords;
};

/// Ray from the ideal point through a reference point. The unit direction is
/// cached because every distance and scalarization call needs it.
class ReferenceLine
{
public:
    /// @throws std::invalid_argument if `direction` is empty or has zero norm
    ReferenceLine(std::vector<double> direction, std::size_t id);

    const std::vector<double> &direction() const noexcept { return direction_; }
    const std::vector<double> &unit() const noexcept { return unit_; }
    double norm() const noexcept { return norm_; }
    std::size_t id() const noexcept { return id_; }
    std::size_t dimension() const noexcept { return direction_.size(); }

private:
    std::vector<double> direction_;
    std::vector<double> unit_;
    double norm_;
    std::size_t id_;
};

struct LayerParams {
    int p_outer = 0;
    int p_inner = 0; // 0 means single layer
};

/// Ordered set of reference lines. Line ids are 0..size()-1 in order.
class ReferenceSet
{
public:
    ReferenceSet() = default;

    /// Builds lines from arbitrary points, assigning ids in order.
    /// @throws std::invalid_argument on empty input, mixed dimensions or zero-norm points
    static ReferenceSet from_points(const std::vector<std::vector<double>> &points, LayerParams layers = {});

    const std::vector<ReferenceLine> &lines() const noexcept { return lines_; }
    const ReferenceLine &operator[](std::size_t i) const { return lines_[i]; }
    std::size_t size() const noexcept { return lines_.size(); }
    std::size_t objectives() const noexcept { return m_; }
    LayerParams layers() const noexcept { return layers_; }

private:
    std::vector<ReferenceLine> lines_;
    std::size_t m_ = 0;
    LayerParams layers_;
};

/// Binomial coefficient as a double-free integer; throws std::overflow_error if it
/// does not fit in 64 bits.
std::size_t binomial(std::size_t n, std::size_t k);

/// Number of simplex-lattice points: C(p + m - 1, m - 1).
std::size_t lattice_size(std::size_t m, int p);

/// All points with coordinates in {0, 1/p, ..., 1} summing to one, in
/// lexicographically descending order.
/// @throws std::invalid_argument if m < 2 or p < 1
std::vector<ReferencePoint> generate_simplex_lattice(std::size_t m, int p);

/// Outer lattice plus an optional inner lattice shrunk halfway toward the
/// centroid, duplicates removed. Outer points come first.
/// @throws std::invalid_argument if m < 2, p_outer < 1 or p_inner < 0
ReferenceSet generate_two_layer(std::size_t m, int p_outer, int p_inner);

/// Conventional division counts for the plain algorithm and for the SBX
/// variant, which uses fewer sub-problems.
LayerParams default_layers(std::size_t m, bool sbx_variant);

/// Distance from `w` to its orthogonal projection on the line.
/// @throws std::invalid_argument on dimension mismatch
double perpendicular_distance(std::span<const double> w, const ReferenceLine &line);

} // namespace wmofss
