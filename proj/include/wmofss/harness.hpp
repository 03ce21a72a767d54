#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <wmofss/metrics.hpp>
#include <wmofss/problems.hpp>
#include <wmofss/refgeom.hpp>
#include <wmofss/swarm.hpp>

namespace wmofss {

inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_io_error = 3;

/// Unreadable, unwritable or malformed files.
class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Which point set IGD is measured against.
enum class IgdReference {
    Lattice, ///< front points on the run's own reference lines
    Sample,  ///< uniform random sample of the analytic front
};

struct RunConfig {
    Family family = Family::DTLZ2;
    std::size_t objectives = 3;
    std::size_t k = 0; ///< 0 picks the family default
    double alpha_bias = 100.0;

    Mode variant = Mode::WMOFSS;
    double theta = 5.0;
    double eta_c = 1.0;

    std::size_t school_size = 0; ///< 0 picks max(210, 2N') or 1000 for SBX modes
    std::size_t iterations = 10000;
    std::size_t runs = 20;
    std::uint64_t seed = 1;

    double step_ind_init = 0.1;
    double step_ind_final = 0.0001;
    double step_vol_factor = 2.0;
    double alpha_sar_init = 0.25;
    double alpha_sar_final = 0.0;
    double alpha_sar_horizon = 0.1;
    InitDomain init_domain = InitDomain::Box;
    bool known_ideal = true;

    std::optional<LayerParams> layers;
    std::string reference_file; ///< CSV of reference points, one per row

    IgdReference igd_reference = IgdReference::Lattice;
    std::size_t pf_samples = 10000;
    bool write_true_pf = false;
    bool write_positions = true;

    std::size_t jobs = 1;
    bool parallel_kernels = true;
    std::filesystem::path output_dir = "results";

    ProblemSpec problem() const;
    SwarmParams swarm_params(std::size_t clusters) const;
    std::size_t resolved_school_size(std::size_t clusters) const;

    /// @throws ConfigurationError naming the offending field
    void validate() const;
};

/// Sets one field from its textual form. Keys use the long flag names without
/// dashes, with '-' or '_' as separators.
/// @throws ConfigurationError on unknown keys or unparsable values
void apply_setting(RunConfig &config, const std::string &key, const std::string &value);

/// Flat "key = value" file; '#' starts a comment.
/// @throws IoError if unreadable, ConfigurationError on bad entries
RunConfig load_config_file(const std::filesystem::path &path, RunConfig base = {});

/// Every field in its textual form, keyed like apply_setting.
std::map<std::string, std::string> describe(const RunConfig &config);

/// Reference lines for the config: point file, explicit layers or defaults.
ReferenceSet build_reference(const RunConfig &config);

/// Point set IGD is measured against for this config.
FrontSet igd_reference_set(const RunConfig &config, const ReferenceSet &reference);

/// Seed of run `index`: derive_seed(master, index).
std::uint64_t run_seed(std::uint64_t master, std::size_t index) noexcept;

/// Rounds to the 9 significant digits written to CSV, so stored and
/// re-read values agree exactly.
double quantize(double value);

struct RunRecord {
    std::size_t run = 0;
    std::uint64_t seed = 0;
    double igd = 0.0;
    double wall_time = 0.0; ///< seconds
    FrontSet front;
    std::vector<std::vector<double>> positions;

    bool operator==(const RunRecord &) const = default;
};

struct RunResult {
    int schema_version = 1;
    std::string software_version;
    std::map<std::string, std::string> config;
    std::vector<RunRecord> per_run;
    StatSummary summary;

    bool operator==(const RunResult &) const = default;
};

/// One run without touching the filesystem.
RunRecord execute_run(const RunConfig &config, const ReferenceSet &reference, const FrontSet &igd_reference,
                      std::size_t index);

/// All runs, without persisting anything.
RunResult execute_experiment(const RunConfig &config);

/// execute_experiment, then writes result.json, igd.csv, front_run<k>.csv and
/// optionally true_pf.csv into config.output_dir.
/// @throws IoError if the directory or a file cannot be written
RunResult run_experiment(const RunConfig &config);

std::string to_json(const RunResult &result);
/// @throws IoError on malformed input
RunResult result_from_json(const std::string &text);

/// "%.8e" in the C locale.
std::string format_number(double value);

void write_igd_csv(const std::filesystem::path &path, const std::vector<RunRecord> &runs);
/// @throws IoError naming the file on missing or malformed content
std::vector<double> read_igd_csv(const std::filesystem::path &path);
void write_front_csv(const std::filesystem::path &path, const FrontSet &points);
/// Rows of comma-separated numbers; blank lines and '#' lines are skipped.
FrontSet read_points_csv(const std::filesystem::path &path);

struct ComparisonGroup {
    std::string name;
    std::vector<double> values;
    StatSummary summary;
};

struct ComparisonReport {
    std::vector<ComparisonGroup> groups;
    KruskalWallis overall;
    double alpha = 0.05;
    /// verdicts[i][j]: '+' if group i is significantly lower than group j.
    std::vector<std::vector<char>> verdicts;
};

/// @throws std::invalid_argument with fewer than two directories, IoError on bad files
ComparisonReport compare(const std::vector<std::filesystem::path> &result_dirs, double alpha = 0.05);
std::string format_comparison(const ComparisonReport &report);

/// Median, maximum and minimum IGD over 20 runs as published for an external
/// or local algorithm.
struct PublishedEntry {
    std::string algorithm;
    Family family;
    std::size_t m;
    double median;
    double maximum;
    double minimum;
};

/// Mean and standard deviation for the SBX operator-set study (m = 5).
struct PublishedMeanSd {
    Mode mode;
    Family family;
    double theta;
    double mean;
    double standard_deviation;
};

/// Main comparison: NSGA-III, MaOPSO and wmoFSS.
const std::vector<PublishedEntry> &published_main_table();
/// Follow-up comparison: wmoFSS against wmoFSS-SBX.
const std::vector<PublishedEntry> &published_sbx_table();
const std::vector<PublishedMeanSd> &published_operator_study();

/// Published constants, plus a "local" column for every result directory whose
/// problem and objective count match a row.
std::string export_reference_table(const std::vector<std::filesystem::path> &local_dirs = {});

} // namespace wmofss
