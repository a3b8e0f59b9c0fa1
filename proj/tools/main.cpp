#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "multigrover/commands.hpp"
#include "multigrover/version.hpp"

namespace {

using namespace multigrover;

/// Raw option values for run (also the sweep base); merged over an optional
/// JSON config file, with explicitly passed flags winning.
struct RunFlags {
    std::string config_path;
    long long n = 0;
    std::string targets;
    std::string unitary;
    std::string gamma;
    std::string iterations;
    bool record_full = false;
    std::uint64_t measure_seed = 0;
    std::string out;
    std::string format;
};

void add_run_flags(CLI::App& cmd, RunFlags& flags) {
    cmd.add_option("--config", flags.config_path,
                   "JSON config file; explicit flags override its fields");
    cmd.add_option("--n", flags.n, "State-space dimension N (>= 2)");
    cmd.add_option("--targets", flags.targets,
                   "Marked indices: idx:a,b,c or count:k@seed");
    cmd.add_option("--unitary", flags.unitary,
                   "V: identity | walsh-hadamard | haar:SEED | file:PATH");
    cmd.add_option("--gamma", flags.gamma,
                   "Initial state: uniform | basis:K | random:SEED | "
                   "file:PATH");
    cmd.add_option("--iterations", flags.iterations,
                   "Iteration count: auto-paper | auto-exact | integer");
    cmd.add_flag("--record-full", flags.record_full,
                 "Also iterate the full N-dimensional state and record "
                 "p_full per step");
    cmd.add_option("--measure-seed", flags.measure_seed,
                   "Sample one measurement of the final state with this seed");
    cmd.add_option("--out", flags.out,
                   "Artifact file (default: standard output)");
    cmd.add_option("--format", flags.format, "Artifact format: csv | json");
}

nlohmann::json parse_config_file(const std::string& path) {
    try {
        return nlohmann::json::parse(read_text_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("cannot parse " + path + ": " + e.what());
    }
}

/// Overwrites config fields with explicitly passed flags. have_n and
/// have_targets track whether the mandatory fields came from anywhere.
void merge_run_flags(const CLI::App& cmd, const RunFlags& flags,
                     RunConfig& config, bool& have_n, bool& have_targets) {
    if (cmd.count("--n") > 0) {
        config.n = static_cast<Eigen::Index>(flags.n);
        have_n = true;
    }
    if (cmd.count("--targets") > 0) {
        config.targets = parse_targets_spec(flags.targets);
        have_targets = true;
    }
    if (cmd.count("--unitary") > 0) {
        config.unitary = parse_unitary_spec(flags.unitary);
    }
    if (cmd.count("--gamma") > 0) {
        config.gamma = parse_state_spec(flags.gamma);
    }
    if (cmd.count("--iterations") > 0) {
        config.iterations = parse_iterations_spec(flags.iterations);
    }
    if (cmd.count("--record-full") > 0) {
        config.record_full = flags.record_full;
    }
    if (cmd.count("--measure-seed") > 0) {
        config.measure_seed = flags.measure_seed;
    }
    if (cmd.count("--out") > 0) {
        config.out = flags.out;
    }
    if (cmd.count("--format") > 0) {
        config.format = parse_output_format(flags.format);
    }
    if (!have_n) {
        throw std::invalid_argument("--n is required (or a --config file)");
    }
    if (!have_targets) {
        throw std::invalid_argument(
            "--targets is required (or a --config file)");
    }
}

std::vector<std::uint64_t> parse_value_list(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start);
        std::size_t used = 0;
        values.push_back(std::stoull(item, &used));
        if (used != item.size()) {
            throw std::invalid_argument("invalid value list: '" + text + "'");
        }
        start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    }
    return values;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiobject quantum search: full-space simulation, reduced "
                 "two-dimensional model, and their cross-validation"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunFlags run_flags;
    CLI::App* run =
        app.add_subcommand("run", "Run one search; write an iteration trace");
    add_run_flags(*run, run_flags);

    RunFlags sweep_flags;
    std::string axis;
    std::string values_text;
    int workers = 1;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "Evaluate a family of searches along one swept axis");
    add_run_flags(*sweep, sweep_flags);
    sweep->add_option("--axis", axis, "Swept axis: n | l | seed");
    sweep->add_option("--values", values_text,
                      "Comma-separated axis values, e.g. 64,256,1024");
    sweep->add_option("--workers", workers,
                      "Worker threads (results are independent of this)");

    std::string scope = "all";
    std::uint64_t seed = 0;
    std::string validate_out;
    CLI::App* validate = app.add_subcommand(
        "validate", "Run the invariant-check families; report pass/fail");
    validate->add_option(
        "--scope", scope, "all | lemma21 | lemma22 | thm23 | degenerate");
    validate->add_option("--seed", seed, "Base seed of the problem family");
    validate->add_option("--out", validate_out,
                         "Report file (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) {
            RunConfig config;
            bool have_n = false;
            bool have_targets = false;
            if (!run_flags.config_path.empty()) {
                config = run_config_from_json(
                    parse_config_file(run_flags.config_path));
                have_n = true;
                have_targets = true;
            }
            merge_run_flags(*run, run_flags, config, have_n, have_targets);
            return cmd_run(config, std::cout, std::cerr);
        }
        if (*sweep) {
            SweepConfig config;
            bool from_file = false;
            if (!sweep_flags.config_path.empty()) {
                config = sweep_config_from_json(
                    parse_config_file(sweep_flags.config_path));
                from_file = true;
            }
            bool have_n = from_file;
            bool have_targets = from_file;
            merge_run_flags(*sweep, sweep_flags, config.base, have_n,
                            have_targets);
            if (sweep->count("--axis") > 0) {
                config.axis = parse_sweep_axis(axis);
            } else if (!from_file) {
                throw std::invalid_argument(
                    "--axis is required (or a --config file)");
            }
            if (sweep->count("--values") > 0) {
                config.values = parse_value_list(values_text);
            } else if (!from_file) {
                throw std::invalid_argument(
                    "--values is required (or a --config file)");
            }
            if (sweep->count("--workers") > 0) {
                if (workers < 1) {
                    throw std::invalid_argument(
                        "--workers must be a positive integer");
                }
                config.workers = workers;
            }
            return cmd_sweep(config, std::cout, std::cerr);
        }
        ValidateConfig config;
        config.scope = parse_validate_scope(scope);
        config.seed = seed;
        config.out = validate_out;
        return cmd_validate(config, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
