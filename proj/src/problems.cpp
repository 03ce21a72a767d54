#include <wmofss/problems.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wmofss {

std::string to_string(Family family)
{
    switch (family) {
    case Family::DTLZ1: return "DTLZ1";
    case Family::DTLZ2: return "DTLZ2";
    case Family::DTLZ3: return "DTLZ3";
    case Family::DTLZ4: return "DTLZ4";
    }
    return "?";
}

Family parse_family(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "dtlz1") return Family::DTLZ1;
    if (lower == "dtlz2") return Family::DTLZ2;
    if (lower == "dtlz3") return Family::DTLZ3;
    if (lower == "dtlz4") return Family::DTLZ4;
    throw std::invalid_argument("unknown problem '" + std::string(name) + "' (expected dtlz1..dtlz4)");
}

ProblemSpec ProblemSpec::make(Family family, std::size_t m)
{
    ProblemSpec spec;
    spec.family = family;
    spec.m = m;
    spec.k = default_k(family);
    spec.validate();
    return spec;
}

void ProblemSpec::validate() const
{
    if (m < 2) {
        throw std::invalid_argument("objective count must be >= 2, got " + std::to_string(m));
    }
    if (k < 1) {
        throw std::invalid_argument("distance-variable count k must be >= 1");
    }
    if (!(alpha_bias > 0.0)) {
        throw std::invalid_argument("alpha_bias must be positive");
    }
}

namespace {

constexpr double half_pi = 0.5 * std::numbers::pi;

// Rastrigin-like multimodal distance function shared by DTLZ1 and DTLZ3.
double g_multimodal(std::span<const double> xm)
{
    double g = static_cast<double>(xm.size());
    for (double xi : xm) {
        const double d = xi - 0.5;
        g += d * d - std::cos(20.0 * std::numbers::pi * d);
    }
    return 100.0 * g;
}

double g_sphere(std::span<const double> xm)
{
    double g = 0.0;
    for (double xi : xm) {
        const double d = xi - 0.5;
        g += d * d;
    }
    return g;
}

void linear_front(std::span<const double> xp, double scale, std::span<double> f)
{
    const std::size_t m = f.size();
    for (std::size_t j = 0; j < m; ++j) {
        double v = scale;
        const std::size_t cos_terms = m - 1 - j;
        for (std::size_t i = 0; i < cos_terms; ++i) {
            v *= xp[i];
        }
        if (j > 0) {
            v *= 1.0 - xp[cos_terms];
        }
        f[j] = v;
    }
}

void spherical_front(std::span<const double> xp, double scale, double alpha, std::span<double> f)
{
    const std::size_t m = f.size();
    auto angle = [alpha](double xi) { return (alpha == 1.0 ? xi : std::pow(xi, alpha)) * half_pi; };
    for (std::size_t j = 0; j < m; ++j) {
        double v = scale;
        const std::size_t cos_terms = m - 1 - j;
        for (std::size_t i = 0; i < cos_terms; ++i) {
            v *= std::cos(angle(xp[i]));
        }
        if (j > 0) {
            v *= std::sin(angle(xp[cos_terms]));
        }
        f[j] = v;
    }
}

} // namespace

void evaluate_unchecked(const ProblemSpec &spec, std::span<const double> x, std::span<double> f)
{
    const std::size_t m = spec.m;
    const auto xp = x.first(m - 1);
    const auto xm = x.subspan(m - 1);
    switch (spec.family) {
    case Family::DTLZ1:
        linear_front(xp, 0.5 * (1.0 + g_multimodal(xm)), f);
        break;
    case Family::DTLZ2:
        spherical_front(xp, 1.0 + g_sphere(xm), 1.0, f);
        break;
    case Family::DTLZ3:
        spherical_front(xp, 1.0 + g_multimodal(xm), 1.0, f);
        break;
    case Family::DTLZ4:
        spherical_front(xp, 1.0 + g_sphere(xm), spec.alpha_bias, f);
        break;
    }
}

ObjectiveVector evaluate(const ProblemSpec &spec, std::span<const double> x)
{
    if (x.size() != spec.n()) {
        throw std::invalid_argument("decision vector has " + std::to_string(x.size()) + " coordinates, "
                                    + to_string(spec.family) + " expects " + std::to_string(spec.n()));
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= 0.0 && x[i] <= 1.0)) {
            throw std::domain_error("x[" + std::to_string(i) + "] = " + std::to_string(x[i])
                                    + " lies outside [0, 1]");
        }
    }
    ObjectiveVector f(spec.m);
    evaluate_unchecked(spec, x, f);
    return f;
}

std::vector<ObjectiveVector> sample_true_pf(const ProblemSpec &spec, std::size_t count, Engine &rng)
{
    if (count < 1) {
        throw std::invalid_argument("sample count must be >= 1");
    }
    std::vector<ObjectiveVector> out(count, ObjectiveVector(spec.m));
    for (auto &f : out) {
        if (spec.family == Family::DTLZ1) {
            // Dirichlet(1, ..., 1) scaled onto sum f = 0.5
            double total = 0.0;
            for (double &v : f) {
                v = standard_exponential(rng);
                total += v;
            }
            for (double &v : f) {
                v = 0.5 * v / total;
            }
        } else {
            double sq = 0.0;
            do {
                sq = 0.0;
                for (double &v : f) {
                    v = std::abs(standard_normal(rng));
                    sq += v * v;
                }
            } while (!(sq > 0.0));
            const double norm = std::sqrt(sq);
            for (double &v : f) {
                v /= norm;
            }
        }
    }
    return out;
}

std::vector<ObjectiveVector> pf_targets(const ProblemSpec &spec, const ReferenceSet &refs)
{
    if (refs.objectives() != spec.m) {
        throw std::invalid_argument("reference set dimension does not match objective count");
    }
    std::vector<ObjectiveVector> out;
    out.reserve(refs.size());
    for (const auto &line : refs.lines()) {
        ObjectiveVector f(spec.m);
        if (spec.family == Family::DTLZ1) {
            double sum = 0.0;
            for (double v : line.direction()) {
                sum += v;
            }
            for (std::size_t j = 0; j < spec.m; ++j) {
                f[j] = 0.5 * line.direction()[j] / sum;
            }
        } else {
            f.assign(line.unit().begin(), line.unit().end());
        }
        out.push_back(std::move(f));
    }
    return out;
}

ObjectiveVector ideal_point(const ProblemSpec &spec)
{
    return ObjectiveVector(spec.m, 0.0);
}

} // namespace wmofss
