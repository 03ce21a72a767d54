// Command-line front end: run experiments, compare result directories, print
// the published reference tables and export front samples.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <wmofss/harness.hpp>
#include <wmofss/rng.hpp>

using namespace wmofss;

namespace {

// Flags mirrored onto RunConfig keys; any flag given on the command line
// overrides the same key from --config.
const std::vector<std::pair<std::string, std::string>> run_flags = {
    {"problem", "dtlz1..dtlz4"},
    {"objectives", "number of objectives m"},
    {"k", "distance-variable count (0 = family default)"},
    {"alpha-bias", "DTLZ4 bias exponent"},
    {"variant", "wmofss, sbx-a, sbx-b or sbx-c"},
    {"theta", "PBI penalty"},
    {"eta-c", "SBX distribution index"},
    {"school-size", "number of fishes (auto = max(210, 2N') or 1000 for SBX)"},
    {"iterations", "iterations per run"},
    {"runs", "independent runs"},
    {"seed", "master seed"},
    {"step-ind-init", "initial individual step"},
    {"step-ind-final", "final individual step"},
    {"step-vol-factor", "volitive step as a multiple of the individual step"},
    {"alpha-sar-init", "initial stagnation-avoidance acceptance"},
    {"alpha-sar-final", "final stagnation-avoidance acceptance"},
    {"alpha-sar-horizon", "fraction of the run over which acceptance decays"},
    {"init-domain", "box or symmetric"},
    {"known-ideal", "use the analytic ideal point"},
    {"layers", "reference divisions 'outer[,inner]' or auto"},
    {"reference-file", "CSV of reference points"},
    {"igd-reference", "lattice or sample"},
    {"pf-samples", "front sample size when igd-reference = sample"},
    {"write-true-pf", "also write true_pf.csv"},
    {"write-positions", "keep decision vectors in result.json"},
    {"jobs", "runs executed concurrently"},
    {"parallel-kernels", "OpenMP inside a run (only when jobs = 1)"},
    {"out", "output directory"},
};

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"wmoFSS many-objective fish school search"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "wmofss " WMOFSS_VERSION);

    auto *run_cmd = app.add_subcommand("run", "run an experiment and write its result directory");
    std::string config_path;
    run_cmd->add_option("--config", config_path, "key = value config file");
    std::vector<std::string> flag_values(run_flags.size());
    std::vector<CLI::Option *> flag_options;
    for (std::size_t i = 0; i < run_flags.size(); ++i) {
        flag_options.push_back(run_cmd->add_option("--" + run_flags[i].first, flag_values[i], run_flags[i].second));
    }
    bool quiet = false;
    run_cmd->add_flag("--quiet", quiet, "suppress the summary line");

    auto *cmp_cmd = app.add_subcommand("compare", "Kruskal-Wallis comparison of result directories");
    std::vector<std::string> cmp_dirs;
    double alpha = 0.05;
    cmp_cmd->add_option("dirs", cmp_dirs, "result directories")->required()->expected(2, -1);
    cmp_cmd->add_option("--alpha", alpha, "significance level");

    auto *ref_cmd = app.add_subcommand("reference-table", "print published IGD tables beside local results");
    std::vector<std::string> ref_dirs;
    ref_cmd->add_option("dirs", ref_dirs, "result directories to show alongside");

    auto *pf_cmd = app.add_subcommand("sample-pf", "write a uniform sample of the analytic front");
    std::string pf_problem = "dtlz2";
    std::size_t pf_m = 3;
    std::size_t pf_count = 10000;
    std::uint64_t pf_seed = 1;
    std::string pf_out = "true_pf.csv";
    pf_cmd->add_option("--problem", pf_problem);
    pf_cmd->add_option("--objectives", pf_m);
    pf_cmd->add_option("--count", pf_count);
    pf_cmd->add_option("--seed", pf_seed);
    pf_cmd->add_option("--out", pf_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config_error;
    }

    try {
        if (run_cmd->parsed()) {
            RunConfig config;
            if (!config_path.empty()) {
                config = load_config_file(config_path);
            }
            for (std::size_t i = 0; i < run_flags.size(); ++i) {
                if (flag_options[i]->count() > 0) {
                    apply_setting(config, run_flags[i].first, flag_values[i]);
                }
            }
            const RunResult result = run_experiment(config);
            if (!quiet) {
                const auto &s = result.summary;
                std::printf("%s m=%zu %s: median %.4e  max %.4e  min %.4e  mean %.4e  sd %.4e  (%zu runs) -> %s\n",
                            to_string(config.family).c_str(), config.objectives, to_string(config.variant).c_str(),
                            s.median, s.maximum, s.minimum, s.mean, s.standard_deviation, s.n_runs,
                            config.output_dir.string().c_str());
            }
        } else if (cmp_cmd->parsed()) {
            std::vector<std::filesystem::path> dirs(cmp_dirs.begin(), cmp_dirs.end());
            std::cout << format_comparison(compare(dirs, alpha));
        } else if (ref_cmd->parsed()) {
            std::vector<std::filesystem::path> dirs(ref_dirs.begin(), ref_dirs.end());
            std::cout << export_reference_table(dirs);
        } else if (pf_cmd->parsed()) {
            ProblemSpec spec;
            try {
                spec = ProblemSpec::make(parse_family(pf_problem), pf_m);
            } catch (const std::invalid_argument &e) {
                throw ConfigurationError(e.what());
            }
            Engine rng(pf_seed);
            write_front_csv(pf_out, sample_true_pf(spec, pf_count, rng));
        }
    } catch (const ConfigurationError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const IoError &e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return exit_io_error;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config_error;
    }
    return exit_ok;
}
