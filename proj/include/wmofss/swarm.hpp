#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <wmofss/kernels.hpp>
#include <wmofss/problems.hpp>
#include <wmofss/refgeom.hpp>
#include <wmofss/rng.hpp>
#include <wmofss/scalarize.hpp>

namespace wmofss {

/// Plain algorithm, or the SBX-guided variant with one of three operator sets:
/// A = individual + volitive, B = individual only, C = all operators.
enum class Mode { WMOFSS, SBX_A, SBX_B, SBX_C };

std::string to_string(Mode mode);
/// Accepts "wmofss", "sbx-a", "sbx-b", "sbx-c" (case-insensitive, '_' allowed).
Mode parse_mode(std::string_view name);

struct VariantConfig {
    Mode mode = Mode::WMOFSS;
    double eta_c = 1.0;
    double theta = 5.0;

    bool sbx() const noexcept { return mode != Mode::WMOFSS; }
    bool uses_instinctive() const noexcept { return mode == Mode::WMOFSS || mode == Mode::SBX_C; }
    bool uses_volitive() const noexcept { return mode != Mode::SBX_B; }

    /// @throws std::invalid_argument if theta < 0 or an SBX mode has eta_c <= 0
    void validate() const;
};

enum class InitDomain {
    Box,       ///< uniform over the problem box
    Symmetric, ///< uniform over [-1, 1] per coordinate, then clamped to the box
};

struct SwarmParams {
    VariantConfig variant;
    std::size_t school_size = 210;
    std::size_t iterations = 10000;
    double step_ind_init = 0.1; ///< box-width fraction per coordinate; box-diagonal fraction for SBX lengths
    double step_ind_final = 0.0001;
    double step_vol_factor = 2.0; ///< step_vol = factor * step_ind
    double alpha_sar_init = 0.25;
    double alpha_sar_final = 0.0;
    double alpha_sar_horizon = 0.1; ///< fraction of the run over which alpha_sar decays
    InitDomain init_domain = InitDomain::Box;
    bool use_known_ideal = true;
    kernels::Exec exec = kernels::Exec::Parallel;

    void validate() const;
};

/// Configuration errors distinguishable from other invalid arguments.
class ConfigurationError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct Fish {
    std::vector<double> x;
    ObjectiveVector f;
    WeightVector w;
    double w_bar = 0.0;
    std::size_t cluster = 0;
    bool is_leader = false;
    std::vector<double> delta_x;
    double delta_w_bar = 0.0;
    Engine rng;

    // Candidate buffers reused across individual moves.
    std::vector<double> cand_x;
    ObjectiveVector cand_f;
    WeightVector cand_w;
};

bool theta_star_dominates(const Fish &i, const Fish &j) noexcept;

struct SchoolState {
    ProblemSpec problem;
    SwarmParams params;
    ReferenceSet reference;
    NormalizationState norm;
    std::vector<Fish> fishes;
    std::vector<std::size_t> designated_leader;    ///< per cluster, lowest-index leader
    std::vector<double> previous_cluster_weight;   ///< per cluster, NaN before the first comparison
    std::size_t iteration = 0;
    double step_ind = 0.0;
    double step_vol = 0.0;
    double alpha_sar = 0.0;

    std::size_t cluster_count() const noexcept { return reference.size(); }
};

/// Linear decay of step_ind and alpha_sar for iteration t of `iterations`.
struct Schedule {
    double step_ind;
    double step_vol;
    double alpha_sar;
};
Schedule schedule_at(const SwarmParams &params, std::size_t t);

/// Places the school, evaluates it, sets the bounds, clusters once, feeds and
/// defines the initial leaders. Fish i draws from sub-stream i of `seed`.
/// @throws ConfigurationError if school_size < reference.size()
SchoolState init_school(const ProblemSpec &spec, const SwarmParams &params, ReferenceSet reference,
                        std::uint64_t seed);

/// Capacity-constrained greedy assignment on a row-major fish x line distance
/// matrix. Every line receives at least floor(S / N') fishes and the remainder
/// go to their nearest line. Ties break on lower line id, then lower fish index.
std::vector<std::size_t> assign_clusters(std::span<const double> distances, std::size_t fishes, std::size_t lines);

/// Clusters the school by perpendicular distance in normalized objective space.
void cluster_assign(SchoolState &school);

/// x + r * step, clamped to the box.
std::vector<double> random_step_candidate(std::span<const double> x, std::span<const double> r, double step);

/// Spread factor for a uniform draw u in [0, 1) using the unbounded SBX constant 2.
double sbx_spread(double u, double eta_c);

/// One child coordinate per (u, v) pair; v <= 0.5 selects the lower child.
std::vector<double> sbx_child(std::span<const double> x, std::span<const double> leader, std::span<const double> u,
                              std::span<const double> v, double eta_c);

/// Aggregated weight of objective vector f in `cluster` under the current bounds.
double aggregated_weight(const SchoolState &school, std::span<const double> f, std::size_t cluster);

/// Random local search with stagnation avoidance. Uses the fish's own stream.
/// Returns true if the candidate was accepted.
bool individual_move(Fish &fish, const SchoolState &school);
Fish individual_movement(Fish fish, const SchoolState &school);

/// Step of length step_ind * sqrt(n) toward an SBX child of the fish and
/// `leader_x`; strict improvement only.
/// A zero-length direction leaves the fish unchanged.
bool individual_move_sbx(Fish &fish, std::span<const double> leader_x, const SchoolState &school);
Fish individual_movement_sbx(Fish fish, const Fish &leader, const SchoolState &school);

/// Folds every fish's objective vector into the normalization bounds.
void update_school_bounds(SchoolState &school);

/// Recomputes w and w_bar for every fish against its own cluster's line.
void feed(SchoolState &school);

/// Flags every fish with the minimal w_bar of its cluster.
void define_leaders(SchoolState &school);

/// Moves non-leaders by the improvement-weighted mean displacement of their cluster.
void collective_instinctive(SchoolState &school);

/// Reciprocal-weight barycenter of each cluster's positions.
std::vector<std::vector<double>> cluster_barycenters(const SchoolState &school);

/// Contracts non-leaders toward (or expands them away from) their barycenter.
void collective_volitive(SchoolState &school);

/// One full main-loop iteration with operator gating per variant.
void iterate(SchoolState &school);

struct SwarmResult {
    std::vector<ObjectiveVector> front;
    std::vector<std::vector<double>> positions;
    std::vector<std::size_t> clusters;
};

/// Per-cluster Pareto filter, unioned in cluster order.
SwarmResult collect_front(const SchoolState &school);

/// Runs the configured number of iterations from a fresh school.
SwarmResult run(const ProblemSpec &spec, const SwarmParams &params, const ReferenceSet &reference,
                std::uint64_t seed);

} // namespace wmofss
