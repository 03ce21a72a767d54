#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include <wmofss/swarm.hpp>

#include "support.hpp"

using namespace wmofss;

namespace {

SwarmParams small_params(Mode mode = Mode::WMOFSS, std::size_t school = 40)
{
    SwarmParams p;
    p.variant.mode = mode;
    p.school_size = school;
    p.iterations = 30;
    p.exec = kernels::Exec::Serial;
    return p;
}

bool inside_box(const std::vector<double> &x)
{
    return std::all_of(x.begin(), x.end(), [](double v) { return v >= 0.0 && v <= 1.0; });
}

std::vector<std::size_t> cluster_sizes(const SchoolState &school)
{
    std::vector<std::size_t> sizes(school.cluster_count(), 0);
    for (const auto &f : school.fishes) {
        ++sizes[f.cluster];
    }
    return sizes;
}

// Builds a school by hand with explicit positions and aggregated weights.
SchoolState manual_school(std::size_t n, std::vector<std::vector<double>> xs, std::vector<double> w_bars,
                          std::vector<std::size_t> clusters, std::size_t lines)
{
    SchoolState s;
    s.problem = ProblemSpec::make(Family::DTLZ2, 2);
    s.problem.k = n - 1;
    s.params = small_params();
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i < lines; ++i) {
        pts.push_back({1.0 + static_cast<double>(i), 1.0});
    }
    s.reference = ReferenceSet::from_points(pts);
    s.norm = NormalizationState::known_ideal({0.0, 0.0});
    s.norm.f_max = {2.0, 2.0};
    s.norm.observed = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Fish f;
        f.x = xs[i];
        f.f = evaluate(s.problem, f.x);
        f.w_bar = w_bars[i];
        f.cluster = clusters[i];
        f.delta_x.assign(n, 0.0);
        f.cand_x.assign(n, 0.0);
        f.cand_f.assign(2, 0.0);
        f.cand_w.assign(2, 0.0);
        f.rng.seed(i + 1);
        s.fishes.push_back(f);
    }
    s.previous_cluster_weight.assign(lines, std::numeric_limits<double>::quiet_NaN());
    return s;
}

} // namespace

TEST(VariantConfigTest, GatingAndParsing)
{
    VariantConfig v;
    v.mode = Mode::SBX_A;
    EXPECT_TRUE(v.sbx());
    EXPECT_FALSE(v.uses_instinctive());
    EXPECT_TRUE(v.uses_volitive());
    v.mode = Mode::SBX_B;
    EXPECT_FALSE(v.uses_instinctive());
    EXPECT_FALSE(v.uses_volitive());
    v.mode = Mode::SBX_C;
    EXPECT_TRUE(v.uses_instinctive());
    EXPECT_TRUE(v.uses_volitive());
    EXPECT_EQ(parse_mode("SBX_B"), Mode::SBX_B);
    EXPECT_EQ(parse_mode("wmofss"), Mode::WMOFSS);
    EXPECT_EQ(to_string(Mode::SBX_C), "sbx-c");
    EXPECT_THROW(parse_mode("sbx-d"), std::invalid_argument);
    v.eta_c = 0.0;
    EXPECT_THROW(v.validate(), std::invalid_argument);
    v = VariantConfig{};
    v.theta = -1.0;
    EXPECT_THROW(v.validate(), std::invalid_argument);
}

TEST(ParamsTest, Validation)
{
    auto p = small_params();
    EXPECT_NO_THROW(p.validate());
    p.step_ind_final = 1.0;
    EXPECT_THROW(p.validate(), ConfigurationError);
    p = small_params();
    p.alpha_sar_init = 1.5;
    EXPECT_THROW(p.validate(), ConfigurationError);
    p = small_params();
    p.alpha_sar_horizon = 0.0;
    EXPECT_THROW(p.validate(), ConfigurationError);
}

TEST(ScheduleTest, LinearDecayAndMonotone)
{
    SwarmParams p;
    p.iterations = 11;
    p.alpha_sar_horizon = 1.0;
    const auto first = schedule_at(p, 0);
    const auto last = schedule_at(p, 10);
    EXPECT_DOUBLE_EQ(first.step_ind, p.step_ind_init);
    EXPECT_NEAR(last.step_ind, p.step_ind_final, 1e-15);
    EXPECT_DOUBLE_EQ(first.alpha_sar, p.alpha_sar_init);
    EXPECT_DOUBLE_EQ(last.alpha_sar, 0.0);
    EXPECT_DOUBLE_EQ(schedule_at(p, 5).step_vol, 2.0 * schedule_at(p, 5).step_ind);
    p.alpha_sar_horizon = 0.1;
    p.iterations = 1000;
    EXPECT_DOUBLE_EQ(schedule_at(p, 500).alpha_sar, 0.0);
    for (std::size_t t = 1; t < p.iterations; ++t) {
        EXPECT_LE(schedule_at(p, t).step_ind, schedule_at(p, t - 1).step_ind);
        EXPECT_LE(schedule_at(p, t).alpha_sar, schedule_at(p, t - 1).alpha_sar);
    }
}

TEST(InitSchool, SbxDefaultsAtThousandFishes)
{
    const auto spec = ProblemSpec::make(Family::DTLZ1, 5);
    const auto lp = default_layers(5, true);
    auto p = small_params(Mode::SBX_B, 1000);
    const auto school = init_school(spec, p, generate_two_layer(5, lp.p_outer, lp.p_inner), 3);
    EXPECT_EQ(school.fishes.size(), 1000u);
    for (auto size : cluster_sizes(school)) {
        EXPECT_GE(size, 1000u / 35u);
    }
    for (const auto &f : school.fishes) {
        EXPECT_TRUE(inside_box(f.x));
    }
}

TEST(InitSchool, DeterministicForSeed)
{
    const auto spec = ProblemSpec::make(Family::DTLZ2, 3);
    const auto refs = generate_two_layer(3, 4, 0);
    const auto a = init_school(spec, small_params(), refs, 5);
    const auto b = init_school(spec, small_params(), refs, 5);
    for (std::size_t i = 0; i < a.fishes.size(); ++i) {
        EXPECT_EQ(a.fishes[i].x, b.fishes[i].x);
        EXPECT_EQ(a.fishes[i].cluster, b.fishes[i].cluster);
        EXPECT_EQ(a.fishes[i].w_bar, b.fishes[i].w_bar);
    }
    const auto c = init_school(spec, small_params(), refs, 6);
    EXPECT_NE(a.fishes[0].x, c.fishes[0].x);
}

TEST(InitSchool, OneFishPerLineWhenSizesMatch)
{
    const auto spec = ProblemSpec::make(Family::DTLZ2, 3);
    const auto refs = generate_two_layer(3, 4, 0);
    const auto school = init_school(spec, small_params(Mode::WMOFSS, refs.size()), refs, 8);
    for (auto size : cluster_sizes(school)) {
        EXPECT_EQ(size, 1u);
    }
    for (const auto &f : school.fishes) {
        EXPECT_TRUE(f.is_leader);
    }
}

TEST(InitSchool, RejectsSmallSchool)
{
    const auto spec = ProblemSpec::make(Family::DTLZ2, 3);
    EXPECT_THROW(init_school(spec, small_params(Mode::WMOFSS, 10), generate_two_layer(3, 4, 0), 1),
                 ConfigurationError);
    EXPECT_THROW(init_school(spec, small_params(), generate_two_layer(4, 2, 0), 1), ConfigurationError);
}

TEST(InitSchool, SymmetricDomainClampsIntoBox)
{
    const auto spec = ProblemSpec::make(Family::DTLZ2, 3);
    auto p = small_params();
    p.init_domain = InitDomain::Symmetric;
    const auto school = init_school(spec, p, generate_two_layer(3, 4, 0), 2);
    std::size_t at_zero = 0;
    for (const auto &f : school.fishes) {
        EXPECT_TRUE(inside_box(f.x));
        at_zero += static_cast<std::size_t>(std::count(f.x.begin(), f.x.end(), 0.0));
    }
    EXPECT_GT(at_zero, 0u);
}

TEST(AssignClusters, EvenSplit)
{
    // Six fishes, three lines; fish i is closest to line i % 3.
    std::vector<double> d(18);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
            d[i * 3 + k] = k == i % 3 ? 0.1 * static_cast<double>(i) : 5.0;
        }
    }
    const auto c = assign_clusters(d, 6, 3);
    EXPECT_EQ(c, (std::vector<std::size_t>{0, 1, 2, 0, 1, 2}));
}

TEST(AssignClusters, RemainderGoesToClosest)
{
    testkit::Gen gen(51);
    std::vector<double> d(7 * 3);
    for (double &v : d) {
        v = gen.real();
    }
    const auto c = assign_clusters(d, 7, 3);
    std::vector<std::size_t> sizes(3, 0);
    for (auto k : c) {
        ++sizes[k];
    }
    for (auto s : sizes) {
        EXPECT_GE(s, 2u);
    }
    EXPECT_EQ(sizes[0] + sizes[1] + sizes[2], 7u);
}

TEST(AssignClusters, ZeroDistanceWins)
{
    std::vector<double> d(4 * 2, 3.0);
    d[2 * 2 + 0] = 0.0; // fish 2 sits on line 0
    const auto c = assign_clusters(d, 4, 2);
    EXPECT_EQ(c[2], 0u);
}

TEST(AssignClusters, TiesBreakOnLineThenFish)
{
    const std::vector<double> d(3 * 3, 1.0);
    EXPECT_EQ(assign_clusters(d, 3, 3), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_THROW(assign_clusters(d, 4, 3), std::invalid_argument);
}

TEST(AssignClusters, CapacityPropertyOnRandomMatrices)
{
    testkit::Gen gen(52);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t lines = gen.index(1, 8);
        const std::size_t fishes = lines + gen.index(0, 30);
        std::vector<double> d(fishes * lines);
        for (double &v : d) {
            v = gen.coin() ? gen.real() : std::round(gen.real() * 3.0);
        }
        const auto c = assign_clusters(d, fishes, lines);
        std::vector<std::size_t> sizes(lines, 0);
        for (auto k : c) {
            ASSERT_LT(k, lines);
            ++sizes[k];
        }
        for (auto s : sizes) {
            EXPECT_GE(s, fishes / lines);
        }
    }
}

TEST(RandomStep, HandCaseAndClamp)
{
    const auto c = random_step_candidate(std::vector<double>{0.5, 0.5}, std::vector<double>{0.5, -0.5}, 0.1);
    EXPECT_NEAR(c[0], 0.55, 1e-15);
    EXPECT_NEAR(c[1], 0.45, 1e-15);
    const auto e = random_step_candidate(std::vector<double>{0.99, 0.01}, std::vector<double>{1.0, -1.0}, 0.1);
    EXPECT_EQ(e, (std::vector<double>{1.0, 0.0}));
    EXPECT_THROW(random_step_candidate(std::vector<double>{0.5}, std::vector<double>{0.5, 0.5}, 0.1),
                 std::invalid_argument);
}

TEST(Sbx, SpreadAndChildAtMedianDraw)
{
    EXPECT_DOUBLE_EQ(sbx_spread(0.5, 1.0), 1.0);
    EXPECT_NEAR(sbx_spread(0.125, 1.0), 0.5, 1e-15);
    EXPECT_NEAR(sbx_spread(0.875, 1.0), 2.0, 1e-15);
    const std::vector<double> x{0.2, 0.9}, l{0.6, 0.3}, u{0.5, 0.5};
    const auto lo = sbx_child(x, l, u, std::vector<double>{0.2, 0.2}, 1.0);
    const auto hi = sbx_child(x, l, u, std::vector<double>{0.8, 0.8}, 1.0);
    EXPECT_NEAR(lo[0], 0.2, 1e-15);
    EXPECT_NEAR(lo[1], 0.3, 1e-15);
    EXPECT_NEAR(hi[0], 0.6, 1e-15);
    EXPECT_NEAR(hi[1], 0.9, 1e-15);
    EXPECT_THROW(sbx_child(x, l, std::vector<double>{0.5}, u, 1.0), std::invalid_argument);
}

TEST(Sbx, ChildrenSymmetricAboutMidpoint)
{
    testkit::Gen gen(53);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = gen.index(1, 6);
        const auto x = gen.vec(n), l = gen.vec(n), u = gen.vec(n);
        const auto lo = sbx_child(x, l, u, std::vector<double>(n, 0.0), 1.0);
        const auto hi = sbx_child(x, l, u, std::vector<double>(n, 1.0), 1.0);
        for (std::size_t j = 0; j < n; ++j) {
            EXPECT_NEAR(lo[j] + hi[j], x[j] + l[j], 1e-12);
            EXPECT_LE(lo[j], hi[j]);
        }
    }
}

TEST(IndividualMove, GreedyNeverWorsensUnderFixedSnapshot)
{
    for (Mode mode : {Mode::WMOFSS, Mode::SBX_B}) {
        const auto spec = ProblemSpec::make(Family::DTLZ2, 3);
        auto p = small_params(mode, 60);
        p.alpha_sar_init = 0.0;
        auto school = init_school(spec, p, generate_two_layer(3, 4, 0), 9);
        const SchoolState snapshot = school;
        for (std::size_t i = 0; i < school.fishes.size(); ++i) {
            Fish &fish = school.fishes[i];
            const double before = aggregated_weight(snapshot, fish.f, fish.cluster);
            const auto &leader = snapshot.fishes[snapshot.designated_leader[fish.cluster]];
            const bool accepted = mode == Mode::WMOFSS ? individual_move(fish, snapshot)
                                                       : individual_move_sbx(fish, leader.x, snapshot);
            const double after = aggregated_weight(snapshot, fish.f, fish.cluster);
            EXPECT_LE(after, before);
            EXPECT_TRUE(inside_box(fish.x));
            if (accepted) {
                EXPECT_GT(fish.delta_w_bar, 0.0);
                EXPECT_NEAR(fish.delta_w_bar, before - after, 1e-12);
            } else {
                EXPECT_EQ(fish.delta_w_bar, 0.0);
                EXPECT_EQ(fish.x, snapshot.fishes[i].x);
            }
        }
    }
}

TEST(IndividualMove, StagnationAvoidanceAcceptsWorseningAtFullRate)
{
    const auto spec = ProblemSpec::make(Family::DTLZ2, 3);
    auto p = small_params(Mode::WMOFSS, 60);
    p.alpha_sar_init = 1.0;
    p.alpha_sar_final = 1.0;
    auto school = init_school(spec, p, generate_two_layer(3, 4, 0), 10);
    for (auto &fish : school.fishes) {
        const auto before = fish.x;
        EXPECT_TRUE(individual_move(fish, school));
        EXPECT_NE(fish.x, before);
    }
}

TEST(IndividualMove, SbxSkipsWhenFishIsItsLeader)
{
    const auto spec = ProblemSpec::make(Family::DTLZ2, 3);
    auto school = init_school(spec, small_params(Mode::SBX_B, 30), generate_two_layer(3, 4, 0), 11);
    Fish &leader = school.fishes[school.designated_leader[0]];
    const auto before = leader.x;
    const Fish moved = individual_movement_sbx(leader, leader, school);
    EXPECT_EQ(moved.x, before);
    EXPECT_EQ(moved.delta_w_bar, 0.0);
}

TEST(Feeding, CloserFishWeighsLess)
{
    const auto spec = ProblemSpec::make(Family::DTLZ2, 2);
    auto school = init_school(spec, small_params(Mode::WMOFSS, 10), generate_two_layer(2, 1, 0), 12);
    school.norm.f_max = {2.0, 2.0};
    Fish &a = school.fishes[0];
    Fish &b = school.fishes[1];
    a.cluster = b.cluster = 0; // line (1, 0)
    a.f = {0.5, 0.1};
    b.f = {0.8, 0.4};
    feed(school);
    EXPECT_LT(a.w_bar, b.w_bar);
    a.f = {0.0, 0.0};
    feed(school);
    EXPECT_EQ(a.w_bar, 0.0);
}

TEST(Feeding, IndependentOfOtherLines)
{
    const auto spec = ProblemSpec::make(Family::DTLZ2, 3);
    auto school = init_school(spec, small_params(Mode::WMOFSS, 20), generate_two_layer(3, 2, 0), 13);
    const Fish probe = school.fishes[0];
    const auto expected = pbi(normalize(probe.f, school.norm), school.reference[probe.cluster], 5.0).g;
    EXPECT_NEAR(probe.w_bar, expected, 1e-12);
}

TEST(Leaders, UniqueTiedAndSingleton)
{
    auto s = manual_school(2, {{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}, {0.4, 0.4}}, {3.0, 1.0, 2.0, 7.0}, {0, 0, 0, 1}, 2);
    define_leaders(s);
    EXPECT_FALSE(s.fishes[0].is_leader);
    EXPECT_TRUE(s.fishes[1].is_leader);
    EXPECT_FALSE(s.fishes[2].is_leader);
    EXPECT_TRUE(s.fishes[3].is_leader);
    EXPECT_EQ(s.designated_leader[0], 1u);
    EXPECT_EQ(s.designated_leader[1], 3u);

    auto t = manual_school(2, {{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}}, {1.0, 1.0, 2.0}, {0, 0, 0}, 1);
    define_leaders(t);
    EXPECT_TRUE(t.fishes[0].is_leader);
    EXPECT_TRUE(t.fishes[1].is_leader);
    EXPECT_FALSE(t.fishes[2].is_leader);
    EXPECT_EQ(t.designated_leader[0], 0u);
}

TEST(Leaders, MatchArgminOracle)
{
    testkit::Gen gen(54);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = gen.index(1, 10);
        std::vector<std::vector<double>> xs(k, std::vector<double>{0.5, 0.5});
        const auto w = gen.coarse_vec(k, 3);
        auto s = manual_school(2, xs, w, std::vector<std::size_t>(k, 0), 1);
        define_leaders(s);
        for (std::size_t i = 0; i < k; ++i) {
            bool dominated = false;
            for (std::size_t j = 0; j < k; ++j) {
                dominated |= theta_star_dominates(s.fishes[j], s.fishes[i]);
            }
            EXPECT_EQ(s.fishes[i].is_leader, !dominated);
        }
    }
}

TEST(Instinctive, NoImproverLeavesPositions)
{
    auto s = manual_school(2, {{0.1, 0.1}, {0.2, 0.2}}, {1.0, 2.0}, {0, 0}, 1);
    define_leaders(s);
    const auto before = s.fishes;
    collective_instinctive(s);
    EXPECT_EQ(s.fishes[0].x, before[0].x);
    EXPECT_EQ(s.fishes[1].x, before[1].x);
}

TEST(Instinctive, SingleImproverDisplacesNonLeaders)
{
    auto s = manual_school(2, {{0.1, 0.1}, {0.2, 0.2}, {0.5, 0.5}}, {1.0, 2.0, 3.0}, {0, 0, 0}, 1);
    define_leaders(s);
    s.fishes[1].delta_x = {0.05, -0.02};
    s.fishes[1].delta_w_bar = 123.0;
    collective_instinctive(s);
    EXPECT_EQ(s.fishes[0].x, (std::vector<double>{0.1, 0.1})); // leader
    EXPECT_NEAR(s.fishes[1].x[0], 0.25, 1e-15);
    EXPECT_NEAR(s.fishes[1].x[1], 0.18, 1e-15);
    EXPECT_NEAR(s.fishes[2].x[0], 0.55, 1e-15);
    EXPECT_NEAR(s.fishes[2].x[1], 0.48, 1e-15);
}

TEST(Barycenter, WeightingCases)
{
    auto s = manual_school(2, {{0.0, 0.0}, {1.0, 1.0}, {0.4, 0.8}}, {2.0, 2.0, 1.0}, {0, 0, 1}, 2);
    auto b = cluster_barycenters(s);
    EXPECT_NEAR(b[0][0], 0.5, 1e-15);
    EXPECT_NEAR(b[1][1], 0.8, 1e-15);

    s = manual_school(2, {{0.0, 0.0}, {1.0, 1.0}}, {1.0, 1.0 / 3.0}, {0, 0}, 1);
    b = cluster_barycenters(s);
    EXPECT_NEAR(b[0][0], 0.75, 1e-12);

    s = manual_school(2, {{0.0, 0.0}, {1.0, 0.5}}, {1.0, 0.0}, {0, 0}, 1);
    b = cluster_barycenters(s);
    EXPECT_NEAR(b[0][0], 1.0, 1e-9);
    EXPECT_NEAR(b[0][1], 0.5, 1e-9);
}

TEST(Volitive, ContractsFirstAndSparesLeaders)
{
    auto s = manual_school(2, {{0.5, 0.5}, {0.1, 0.1}, {0.9, 0.9}}, {1.0, 2.0, 2.0}, {0, 0, 0}, 1);
    define_leaders(s);
    s.step_vol = 0.05;
    const auto bary = cluster_barycenters(s)[0];
    auto dist = [&](const std::vector<double> &x) { return std::hypot(x[0] - bary[0], x[1] - bary[1]); };
    const double d1 = dist(s.fishes[1].x), d2 = dist(s.fishes[2].x);
    collective_volitive(s);
    EXPECT_EQ(s.fishes[0].x, (std::vector<double>{0.5, 0.5}));
    EXPECT_LE(dist(s.fishes[1].x), d1);
    EXPECT_LE(dist(s.fishes[2].x), d2);
}

TEST(Volitive, ExpandsWhenClusterWeightDidNotDrop)
{
    auto s = manual_school(2, {{0.5, 0.5}, {0.4, 0.4}}, {1.0, 2.0}, {0, 0}, 1);
    define_leaders(s);
    s.step_vol = 0.05;
    s.previous_cluster_weight[0] = 1.0; // current total 3.0 is larger
    const auto bary = cluster_barycenters(s)[0];
    const double before = std::hypot(s.fishes[1].x[0] - bary[0], s.fishes[1].x[1] - bary[1]);
    collective_volitive(s);
    const double after = std::hypot(s.fishes[1].x[0] - bary[0], s.fishes[1].x[1] - bary[1]);
    EXPECT_GE(after, before);
    EXPECT_EQ(s.previous_cluster_weight[0], 3.0);
}

TEST(Volitive, FishAtBarycenterStays)
{
    auto s = manual_school(2, {{0.5, 0.5}, {0.5, 0.5}}, {1.0, 2.0}, {0, 0}, 1);
    define_leaders(s);
    s.step_vol = 0.05;
    collective_volitive(s);
    EXPECT_EQ(s.fishes[1].x, (std::vector<double>{0.5, 0.5}));
}

TEST(Iterate, LeadersUntouchedByCollectiveMoves)
{
    const auto spec = ProblemSpec::make(Family::DTLZ2, 3);
    auto school = init_school(spec, small_params(Mode::WMOFSS, 60), generate_two_layer(3, 4, 0), 14);
    for (int t = 0; t < 10; ++t) {
        school.step_ind = schedule_at(school.params, school.iteration).step_ind;
        for (auto &fish : school.fishes) {
            individual_move(fish, school);
        }
        update_school_bounds(school);
        feed(school);
        define_leaders(school);
        std::vector<std::vector<double>> leaders;
        for (const auto &f : school.fishes) {
            if (f.is_leader) {
                leaders.push_back(f.x);
            }
        }
        collective_instinctive(school);
        collective_volitive(school);
        std::size_t k = 0;
        for (const auto &f : school.fishes) {
            if (f.is_leader) {
                EXPECT_EQ(f.x, leaders[k++]);
            }
            EXPECT_TRUE(inside_box(f.x));
        }
        ++school.iteration;
    }
}

TEST(Run, ZeroIterationsFiltersInitialSchool)
{
    const auto spec = ProblemSpec::make(Family::DTLZ1, 3);
    const auto refs = generate_two_layer(3, 4, 0);
    auto p = small_params(Mode::WMOFSS, 45);
    p.iterations = 0;
    const auto result = run(spec, p, refs, 15);
    const auto school = init_school(spec, p, refs, 15);
    EXPECT_EQ(result.front, collect_front(school).front);
    EXPECT_FALSE(result.front.empty());
}

TEST(Run, DeterministicAndPerClusterNonDominated)
{
    for (Mode mode : {Mode::WMOFSS, Mode::SBX_A, Mode::SBX_B, Mode::SBX_C}) {
        const auto spec = ProblemSpec::make(Family::DTLZ2, 3);
        const auto refs = generate_two_layer(3, 4, 0);
        const auto a = run(spec, small_params(mode, 45), refs, 16);
        const auto b = run(spec, small_params(mode, 45), refs, 16);
        EXPECT_EQ(a.front, b.front);
        EXPECT_EQ(a.positions, b.positions);
        for (std::size_t i = 0; i < a.front.size(); ++i) {
            EXPECT_TRUE(inside_box(a.positions[i]));
            for (std::size_t j = 0; j < a.front.size(); ++j) {
                if (a.clusters[i] == a.clusters[j]) {
                    EXPECT_FALSE(pareto_dominates(a.front[j], a.front[i]));
                }
            }
        }
    }
}

TEST(Run, OneFishPerLineMakesCollectiveMovesNoOps)
{
    const auto spec = ProblemSpec::make(Family::DTLZ2, 3);
    const auto refs = generate_two_layer(3, 4, 0);
    auto p = small_params(Mode::WMOFSS, refs.size());
    auto school = init_school(spec, p, refs, 17);
    for (int t = 0; t < 5; ++t) {
        iterate(school);
        for (const auto &f : school.fishes) {
            EXPECT_TRUE(f.is_leader);
        }
    }
    // Same trajectory with the collective operators removed.
    auto lone = init_school(spec, p, refs, 17);
    for (int t = 0; t < 5; ++t) {
        lone.step_ind = schedule_at(p, lone.iteration).step_ind;
        lone.alpha_sar = schedule_at(p, lone.iteration).alpha_sar;
        for (auto &fish : lone.fishes) {
            individual_move(fish, lone);
        }
        update_school_bounds(lone);
        feed(lone);
        define_leaders(lone);
        ++lone.iteration;
    }
    for (std::size_t i = 0; i < school.fishes.size(); ++i) {
        EXPECT_EQ(school.fishes[i].x, lone.fishes[i].x);
    }
}
