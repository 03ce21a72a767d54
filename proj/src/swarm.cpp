#include <wmofss/swarm.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <wmofss/metrics.hpp>

namespace wmofss {

std::string to_string(Mode mode)
{
    switch (mode) {
    case Mode::WMOFSS: return "wmofss";
    case Mode::SBX_A: return "sbx-a";
    case Mode::SBX_B: return "sbx-b";
    case Mode::SBX_C: return "sbx-c";
    }
    return "?";
}

Mode parse_mode(std::string_view name)
{
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return c == '_' ? '-' : std::tolower(c); });
    if (s == "wmofss") return Mode::WMOFSS;
    if (s == "sbx-a") return Mode::SBX_A;
    if (s == "sbx-b") return Mode::SBX_B;
    if (s == "sbx-c") return Mode::SBX_C;
    throw std::invalid_argument("unknown variant '" + std::string(name) + "' (expected wmofss, sbx-a, sbx-b, sbx-c)");
}

void VariantConfig::validate() const
{
    if (!(theta >= 0.0)) {
        throw ConfigurationError("theta must be nonnegative");
    }
    if (sbx() && !(eta_c > 0.0)) {
        throw ConfigurationError("eta_c must be positive for SBX variants");
    }
}

void SwarmParams::validate() const
{
    variant.validate();
    if (school_size < 1) {
        throw ConfigurationError("school_size must be >= 1");
    }
    if (!(step_ind_init > 0.0) || !(step_ind_final > 0.0) || step_ind_final > step_ind_init) {
        throw ConfigurationError("step_ind_init and step_ind_final must satisfy 0 < final <= init");
    }
    if (!(step_vol_factor >= 0.0)) {
        throw ConfigurationError("step_vol_factor must be nonnegative");
    }
    if (!(alpha_sar_init >= 0.0 && alpha_sar_init <= 1.0) || !(alpha_sar_final >= 0.0)
        || alpha_sar_final > alpha_sar_init) {
        throw ConfigurationError("alpha_sar must satisfy 0 <= final <= init <= 1");
    }
    if (!(alpha_sar_horizon > 0.0)) {
        throw ConfigurationError("alpha_sar_horizon must be positive");
    }
}

bool theta_star_dominates(const Fish &i, const Fish &j) noexcept
{
    return theta_star_dominates(i.cluster, i.w_bar, j.cluster, j.w_bar);
}

Schedule schedule_at(const SwarmParams &params, std::size_t t)
{
    const double frac = params.iterations > 1
                            ? static_cast<double>(std::min(t, params.iterations - 1))
                                  / static_cast<double>(params.iterations - 1)
                            : 0.0;
    Schedule s;
    s.step_ind = params.step_ind_init - (params.step_ind_init - params.step_ind_final) * frac;
    s.step_vol = params.step_vol_factor * s.step_ind;
    const double alpha_frac = params.alpha_sar_horizon > 0.0 ? std::min(1.0, frac / params.alpha_sar_horizon) : 1.0;
    s.alpha_sar = params.alpha_sar_init - (params.alpha_sar_init - params.alpha_sar_final) * alpha_frac;
    return s;
}

namespace {

constexpr double lower_bound = 0.0;
constexpr double upper_bound = 1.0;
constexpr double min_direction = 1e-12;
constexpr double w_bar_floor = 1e-12;

double clamp_box(double v) noexcept
{
    return std::clamp(v, lower_bound, upper_bound);
}

void apply_schedule(SchoolState &school)
{
    const auto s = schedule_at(school.params, school.iteration);
    school.step_ind = s.step_ind;
    school.step_vol = s.step_vol;
    school.alpha_sar = s.alpha_sar;
}

void reject(Fish &fish)
{
    std::fill(fish.delta_x.begin(), fish.delta_x.end(), 0.0);
    fish.delta_w_bar = 0.0;
}

// Scores fish.cand_x under the school's bounds and moves the fish there when
// accepted. Worsening moves pass only through the stagnation-avoidance draw.
bool settle_candidate(Fish &fish, const SchoolState &school, bool allow_worsening)
{
    const auto &line = school.reference[fish.cluster];
    const double theta = school.params.variant.theta;
    evaluate_unchecked(school.problem, fish.cand_x, fish.cand_f);
    normalize_into(fish.f, school.norm, fish.w);
    const double current = pbi_value(fish.w, line, theta);
    normalize_into(fish.cand_f, school.norm, fish.cand_w);
    const double candidate = pbi_value(fish.cand_w, line, theta);

    bool accept = candidate < current;
    if (!accept && allow_worsening && school.alpha_sar > 0.0) {
        accept = uniform01(fish.rng) < school.alpha_sar;
    }
    if (!accept) {
        fish.w_bar = current;
        reject(fish);
        return false;
    }
    for (std::size_t j = 0; j < fish.x.size(); ++j) {
        fish.delta_x[j] = fish.cand_x[j] - fish.x[j];
    }
    fish.delta_w_bar = current - candidate;
    std::swap(fish.x, fish.cand_x);
    std::swap(fish.f, fish.cand_f);
    std::swap(fish.w, fish.cand_w);
    fish.w_bar = candidate;
    return true;
}

void reevaluate(SchoolState &school, const std::vector<char> &moved)
{
    kernels::for_each_index(school.params.exec, school.fishes.size(), [&](std::size_t i) {
        if (moved[i]) {
            evaluate_unchecked(school.problem, school.fishes[i].x, school.fishes[i].f);
        }
    });
}

std::vector<std::vector<std::size_t>> members_by_cluster(const SchoolState &school)
{
    std::vector<std::vector<std::size_t>> members(school.cluster_count());
    for (std::size_t i = 0; i < school.fishes.size(); ++i) {
        members[school.fishes[i].cluster].push_back(i);
    }
    return members;
}

} // namespace

SchoolState init_school(const ProblemSpec &spec, const SwarmParams &params, ReferenceSet reference,
                        std::uint64_t seed)
{
    spec.validate();
    params.validate();
    if (reference.size() == 0 || reference.objectives() != spec.m) {
        throw ConfigurationError("reference set does not match the objective count");
    }
    if (params.school_size < reference.size()) {
        throw ConfigurationError("school_size (" + std::to_string(params.school_size)
                                 + ") is smaller than the number of reference lines ("
                                 + std::to_string(reference.size()) + ")");
    }

    SchoolState school;
    school.problem = spec;
    school.params = params;
    school.reference = std::move(reference);
    school.norm = params.use_known_ideal ? NormalizationState::known_ideal(ideal_point(spec))
                                         : NormalizationState::unknown_ideal(spec.m);
    apply_schedule(school);

    const std::size_t n = spec.n();
    school.fishes.resize(params.school_size);
    for (std::size_t i = 0; i < school.fishes.size(); ++i) {
        Fish &fish = school.fishes[i];
        fish.rng.seed(derive_seed(seed, i));
        fish.x.resize(n);
        for (double &v : fish.x) {
            v = params.init_domain == InitDomain::Box ? uniform(fish.rng, lower_bound, upper_bound)
                                                      : clamp_box(uniform(fish.rng, -1.0, 1.0));
        }
        fish.f.assign(spec.m, 0.0);
        fish.w.assign(spec.m, 0.0);
        fish.delta_x.assign(n, 0.0);
        fish.cand_x.assign(n, 0.0);
        fish.cand_f.assign(spec.m, 0.0);
        fish.cand_w.assign(spec.m, 0.0);
    }
    kernels::for_each_index(params.exec, school.fishes.size(), [&](std::size_t i) {
        evaluate_unchecked(spec, school.fishes[i].x, school.fishes[i].f);
    });

    update_school_bounds(school);
    cluster_assign(school);
    feed(school);
    define_leaders(school);
    school.previous_cluster_weight.assign(school.cluster_count(), std::numeric_limits<double>::quiet_NaN());
    return school;
}

std::vector<std::size_t> assign_clusters(std::span<const double> distances, std::size_t fishes, std::size_t lines)
{
    if (lines == 0 || distances.size() != fishes * lines) {
        throw std::invalid_argument("assign_clusters: distance matrix has the wrong shape");
    }
    const std::size_t floor_cap = fishes / lines;
    constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();

    std::vector<std::size_t> order(distances.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Entry e is (fish e / lines, line e % lines); order by distance, then line, then fish.
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (distances[a] != distances[b]) {
            return distances[a] < distances[b];
        }
        if (a % lines != b % lines) {
            return a % lines < b % lines;
        }
        return a / lines < b / lines;
    });

    std::vector<std::size_t> cluster(fishes, unassigned);
    std::vector<std::size_t> count(lines, 0);
    std::size_t placed = 0;
    for (std::size_t e : order) {
        if (placed == floor_cap * lines) {
            break;
        }
        const std::size_t fish = e / lines;
        const std::size_t line = e % lines;
        if (cluster[fish] == unassigned && count[line] < floor_cap) {
            cluster[fish] = line;
            ++count[line];
            ++placed;
        }
    }
    for (std::size_t fish = 0; fish < fishes; ++fish) {
        if (cluster[fish] != unassigned) {
            continue;
        }
        const auto row = distances.subspan(fish * lines, lines);
        cluster[fish] = static_cast<std::size_t>(std::min_element(row.begin(), row.end()) - row.begin());
    }
    return cluster;
}

void cluster_assign(SchoolState &school)
{
    std::vector<std::vector<double>> ws(school.fishes.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
        ws[i] = normalize(school.fishes[i].f, school.norm);
    }
    const auto distances = kernels::distance_matrix(school.params.exec, ws, school.reference);
    const auto clusters = assign_clusters(distances, ws.size(), school.reference.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
        school.fishes[i].cluster = clusters[i];
    }
}

std::vector<double> random_step_candidate(std::span<const double> x, std::span<const double> r, double step)
{
    if (x.size() != r.size()) {
        throw std::invalid_argument("random_step_candidate: dimension mismatch");
    }
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        out[j] = clamp_box(x[j] + r[j] * step);
    }
    return out;
}

double sbx_spread(double u, double eta_c)
{
    constexpr double spread_constant = 2.0;
    const double exponent = 1.0 / (eta_c + 1.0);
    if (u <= 1.0 / spread_constant) {
        return std::pow(spread_constant * u, exponent);
    }
    return std::pow(1.0 / (2.0 - spread_constant * u), exponent);
}

std::vector<double> sbx_child(std::span<const double> x, std::span<const double> leader, std::span<const double> u,
                              std::span<const double> v, double eta_c)
{
    if (x.size() != leader.size() || x.size() != u.size() || x.size() != v.size()) {
        throw std::invalid_argument("sbx_child: dimension mismatch");
    }
    std::vector<double> y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double spread = sbx_spread(u[j], eta_c) * std::abs(x[j] - leader[j]);
        y[j] = v[j] <= 0.5 ? 0.5 * ((x[j] + leader[j]) - spread) : 0.5 * ((x[j] + leader[j]) + spread);
    }
    return y;
}

double aggregated_weight(const SchoolState &school, std::span<const double> f, std::size_t cluster)
{
    const auto w = normalize(f, school.norm);
    return pbi_value(w, school.reference[cluster], school.params.variant.theta);
}

bool individual_move(Fish &fish, const SchoolState &school)
{
    for (std::size_t j = 0; j < fish.x.size(); ++j) {
        const double r = uniform(fish.rng, -1.0, 1.0);
        fish.cand_x[j] = clamp_box(fish.x[j] + r * school.step_ind);
    }
    return settle_candidate(fish, school, true);
}

Fish individual_movement(Fish fish, const SchoolState &school)
{
    individual_move(fish, school);
    return fish;
}

bool individual_move_sbx(Fish &fish, std::span<const double> leader_x, const SchoolState &school)
{
    const double eta_c = school.params.variant.eta_c;
    double sq = 0.0;
    for (std::size_t j = 0; j < fish.x.size(); ++j) {
        const double u = uniform01(fish.rng);
        const double v = uniform01(fish.rng);
        const double spread = sbx_spread(u, eta_c) * std::abs(fish.x[j] - leader_x[j]);
        const double mid = fish.x[j] + leader_x[j];
        const double y = v <= 0.5 ? 0.5 * (mid - spread) : 0.5 * (mid + spread);
        fish.cand_x[j] = y - fish.x[j];
        sq += fish.cand_x[j] * fish.cand_x[j];
    }
    const double norm = std::sqrt(sq);
    if (norm < min_direction) {
        reject(fish);
        return false;
    }
    // The SBX step is a length, so step_ind scales the box diagonal here.
    const double diagonal = std::sqrt(static_cast<double>(fish.x.size())) * (upper_bound - lower_bound);
    const double scale = school.step_ind * diagonal / norm;
    for (std::size_t j = 0; j < fish.x.size(); ++j) {
        fish.cand_x[j] = clamp_box(fish.x[j] + scale * fish.cand_x[j]);
    }
    return settle_candidate(fish, school, false);
}

Fish individual_movement_sbx(Fish fish, const Fish &leader, const SchoolState &school)
{
    individual_move_sbx(fish, leader.x, school);
    return fish;
}

void update_school_bounds(SchoolState &school)
{
    for (const auto &fish : school.fishes) {
        update_bounds_inplace(school.norm, std::span<const ObjectiveVector>(&fish.f, 1));
    }
}

void feed(SchoolState &school)
{
    const double theta = school.params.variant.theta;
    kernels::for_each_index(school.params.exec, school.fishes.size(), [&](std::size_t i) {
        Fish &fish = school.fishes[i];
        normalize_into(fish.f, school.norm, fish.w);
        fish.w_bar = pbi_value(fish.w, school.reference[fish.cluster], theta);
    });
}

void define_leaders(SchoolState &school)
{
    const std::size_t clusters = school.cluster_count();
    std::vector<double> best(clusters, std::numeric_limits<double>::infinity());
    school.designated_leader.assign(clusters, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < school.fishes.size(); ++i) {
        const Fish &fish = school.fishes[i];
        if (fish.w_bar < best[fish.cluster] || school.designated_leader[fish.cluster] == std::numeric_limits<std::size_t>::max()) {
            best[fish.cluster] = fish.w_bar;
            school.designated_leader[fish.cluster] = i;
        }
    }
    for (auto &fish : school.fishes) {
        fish.is_leader = fish.w_bar == best[fish.cluster];
    }
}

void collective_instinctive(SchoolState &school)
{
    const std::size_t clusters = school.cluster_count();
    const std::size_t n = school.problem.n();
    std::vector<std::vector<double>> numerator(clusters, std::vector<double>(n, 0.0));
    std::vector<double> denominator(clusters, 0.0);
    for (const auto &fish : school.fishes) {
        if (fish.delta_w_bar > 0.0) {
            for (std::size_t j = 0; j < n; ++j) {
                numerator[fish.cluster][j] += fish.delta_x[j] * fish.delta_w_bar;
            }
            denominator[fish.cluster] += fish.delta_w_bar;
        }
    }
    std::vector<char> moved(school.fishes.size(), 0);
    for (std::size_t i = 0; i < school.fishes.size(); ++i) {
        Fish &fish = school.fishes[i];
        const double den = denominator[fish.cluster];
        if (fish.is_leader || !(den > 0.0)) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            fish.x[j] = clamp_box(fish.x[j] + numerator[fish.cluster][j] / den);
        }
        moved[i] = 1;
    }
    reevaluate(school, moved);
}

std::vector<std::vector<double>> cluster_barycenters(const SchoolState &school)
{
    const std::size_t n = school.problem.n();
    std::vector<std::vector<double>> sums(school.cluster_count(), std::vector<double>(n, 0.0));
    std::vector<double> total(school.cluster_count(), 0.0);
    for (const auto &fish : school.fishes) {
        const double weight = 1.0 / std::max(fish.w_bar, w_bar_floor);
        for (std::size_t j = 0; j < n; ++j) {
            sums[fish.cluster][j] += fish.x[j] * weight;
        }
        total[fish.cluster] += weight;
    }
    for (std::size_t c = 0; c < sums.size(); ++c) {
        if (total[c] > 0.0) {
            for (double &v : sums[c]) {
                v /= total[c];
            }
        }
    }
    return sums;
}

void collective_volitive(SchoolState &school)
{
    const std::size_t clusters = school.cluster_count();
    const auto barycenter = cluster_barycenters(school);

    std::vector<double> weight(clusters, 0.0);
    for (const auto &fish : school.fishes) {
        weight[fish.cluster] += fish.w_bar;
    }
    std::vector<char> contract(clusters, 1);
    for (std::size_t c = 0; c < clusters; ++c) {
        const double prev = school.previous_cluster_weight[c];
        contract[c] = std::isnan(prev) || weight[c] < prev;
        school.previous_cluster_weight[c] = weight[c];
    }

    std::vector<char> moved(school.fishes.size(), 0);
    const double step_vol = school.step_vol;
    kernels::for_each_index(school.params.exec, school.fishes.size(), [&](std::size_t i) {
        Fish &fish = school.fishes[i];
        if (fish.is_leader) {
            return;
        }
        const auto &b = barycenter[fish.cluster];
        double sq = 0.0;
        for (std::size_t j = 0; j < fish.x.size(); ++j) {
            sq += (fish.x[j] - b[j]) * (fish.x[j] - b[j]);
        }
        const double dist = std::sqrt(sq);
        if (!(dist > 0.0)) {
            return;
        }
        const double sign = contract[fish.cluster] ? -1.0 : 1.0;
        const double scale = sign * step_vol * uniform01(fish.rng) / dist;
        for (std::size_t j = 0; j < fish.x.size(); ++j) {
            fish.x[j] = clamp_box(fish.x[j] + scale * (fish.x[j] - b[j]));
        }
        moved[i] = 1;
    });
    reevaluate(school, moved);
}

void iterate(SchoolState &school)
{
    apply_schedule(school);
    const auto &variant = school.params.variant;

    if (variant.sbx()) {
        std::vector<std::vector<double>> leader_x(school.cluster_count());
        for (std::size_t c = 0; c < leader_x.size(); ++c) {
            leader_x[c] = school.fishes[school.designated_leader[c]].x;
        }
        kernels::for_each_index(school.params.exec, school.fishes.size(), [&](std::size_t i) {
            Fish &fish = school.fishes[i];
            individual_move_sbx(fish, leader_x[fish.cluster], school);
        });
    } else {
        kernels::for_each_index(school.params.exec, school.fishes.size(),
                                [&](std::size_t i) { individual_move(school.fishes[i], school); });
    }

    update_school_bounds(school);
    feed(school);
    define_leaders(school);
    if (variant.uses_instinctive()) {
        collective_instinctive(school);
    }
    if (variant.uses_volitive()) {
        collective_volitive(school);
    }
    ++school.iteration;
}

SwarmResult collect_front(const SchoolState &school)
{
    SwarmResult result;
    for (const auto &members : members_by_cluster(school)) {
        FrontSet fs;
        fs.reserve(members.size());
        for (auto i : members) {
            fs.push_back(school.fishes[i].f);
        }
        for (auto k : pareto_filter_indices(fs)) {
            const Fish &fish = school.fishes[members[k]];
            result.front.push_back(fish.f);
            result.positions.push_back(fish.x);
            result.clusters.push_back(fish.cluster);
        }
    }
    return result;
}

SwarmResult run(const ProblemSpec &spec, const SwarmParams &params, const ReferenceSet &reference,
                std::uint64_t seed)
{
    auto school = init_school(spec, params, reference, seed);
    for (std::size_t t = 0; t < params.iterations; ++t) {
        iterate(school);
    }
    return collect_front(school);
}

} // namespace wmofss
