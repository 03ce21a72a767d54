#pragma once

// Hand-rolled generators and independent oracles shared by the unit tests and
// the acceptance binary. Oracles deliberately avoid the library's code paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace testkit {

/// Small deterministic generator for property tests.
class Gen
{
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double real(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t index(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_); }
    bool coin() { return index(0, 1) == 1; }

    std::vector<double> vec(std::size_t n, double lo = 0.0, double hi = 1.0)
    {
        std::vector<double> v(n);
        for (double &x : v) {
            x = real(lo, hi);
        }
        return v;
    }

    /// Values from a tiny alphabet so that duplicates and ties are common.
    std::vector<double> coarse_vec(std::size_t n, int levels)
    {
        std::vector<double> v(n);
        for (double &x : v) {
            x = static_cast<double>(index(0, static_cast<std::size_t>(levels - 1)));
        }
        return v;
    }

    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Counts compositions of p into m nonnegative parts by walking every one of
/// them, choosing each leading part in turn.
inline std::size_t count_compositions(std::size_t m, int p)
{
    if (m == 1) {
        return 1;
    }
    std::size_t count = 0;
    for (int v = 0; v <= p; ++v) {
        count += count_compositions(m - 1, p - v);
    }
    return count;
}

/// Compositions of p into m parts by recursion on the last part, as integer
/// tuples. Used where the full point set is needed.
inline void compositions(std::size_t m, int p, std::vector<int> &prefix, std::vector<std::vector<int>> &out)
{
    if (prefix.size() + 1 == m) {
        prefix.push_back(p);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = 0; v <= p; ++v) {
        prefix.push_back(v);
        compositions(m, p - v, prefix, out);
        prefix.pop_back();
    }
}

/// Exhaustive Pareto check: index i survives iff no j is <= everywhere and < somewhere.
inline std::vector<std::size_t> exhaustive_nondominated(const std::vector<std::vector<double>> &pts)
{
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < pts.size(); ++j) {
            std::size_t le = 0, lt = 0;
            for (std::size_t d = 0; d < pts[i].size(); ++d) {
                le += pts[j][d] <= pts[i][d];
                lt += pts[j][d] < pts[i][d];
            }
            if (le == pts[i].size() && lt > 0) {
                beaten = true;
            }
        }
        if (!beaten) {
            keep.push_back(i);
        }
    }
    return keep;
}

/// Chi-square upper tail in closed form for one and two degrees of freedom.
inline double chi_square_sf_closed(double x, int df)
{
    if (df == 1) {
        return std::erfc(std::sqrt(x / 2.0));
    }
    return std::exp(-x / 2.0);
}

/// Kruskal-Wallis H by O(N^2) mid-rank counting with tie correction.
inline double naive_kruskal_h(const std::vector<std::vector<double>> &groups)
{
    std::vector<double> all;
    for (const auto &g : groups) {
        all.insert(all.end(), g.begin(), g.end());
    }
    const double n = static_cast<double>(all.size());
    auto rank_of = [&](double v) {
        double below = 0, equal = 0;
        for (double a : all) {
            below += a < v;
            equal += a == v;
        }
        return below + (equal + 1.0) / 2.0;
    };
    double h = 0.0;
    for (const auto &g : groups) {
        double r = 0.0;
        for (double v : g) {
            r += rank_of(v);
        }
        h += r * r / static_cast<double>(g.size());
    }
    h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0);
    double ties = 0.0;
    std::vector<double> sorted = all;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        const double t = static_cast<double>(j - i);
        ties += t * t * t - t;
        i = j;
    }
    const double c = 1.0 - ties / (n * n * n - n);
    return c > 0.0 ? h / c : 0.0;
}

/// Straight-line perpendicular distance via the Pythagorean identity.
inline double pythagorean_distance(const std::vector<double> &w, const std::vector<double> &dir)
{
    double ww = 0, wd = 0, dd = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        ww += w[j] * w[j];
        wd += w[j] * dir[j];
        dd += dir[j] * dir[j];
    }
    return std::sqrt(std::max(0.0, ww - wd * wd / dd));
}

} // namespace testkit
