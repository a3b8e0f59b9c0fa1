#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "multigrover/generators.hpp"

namespace multigrover {

// Spec-string grammar used on the command line and in config files:
//   unitary:    identity | walsh-hadamard | haar:SEED | file:PATH
//   gamma:      uniform | basis:K | random:SEED | file:PATH
//   targets:    idx:a,b,c | count:k@seed
//   iterations: auto-paper | auto-exact | nonnegative integer

UnitarySpec parse_unitary_spec(const std::string& text);
StateSpec parse_state_spec(const std::string& text);
TargetsSpec parse_targets_spec(const std::string& text);

/// Canonical spec strings, used to echo configs into artifact metadata.
std::string format_unitary_spec(const UnitarySpec& spec);
std::string format_state_spec(const StateSpec& spec);
std::string format_targets_spec(const TargetsSpec& spec);

struct IterationsSpec {
    enum class Mode { AutoPaper, AutoExact, Fixed };

    Mode mode = Mode::AutoPaper;
    long count = 0; // Fixed only
};

IterationsSpec parse_iterations_spec(const std::string& text);
std::string format_iterations_spec(const IterationsSpec& spec);

enum class OutputFormat { Csv, Json };

OutputFormat parse_output_format(const std::string& text);

struct RunConfig {
    Eigen::Index n = 0;
    TargetsSpec targets;
    UnitarySpec unitary;
    StateSpec gamma;
    IterationsSpec iterations;
    bool record_full = false;
    std::optional<std::uint64_t> measure_seed;
    std::string out;   // empty: artifact goes to standard output
    OutputFormat format = OutputFormat::Csv;
};

enum class SweepAxis { N, TargetCount, Seed };

SweepAxis parse_sweep_axis(const std::string& text);

struct SweepConfig {
    RunConfig base;
    SweepAxis axis = SweepAxis::N;
    std::vector<std::uint64_t> values;
    int workers = 1;
};

enum class ValidateScope { All, Lemma21, Lemma22, Thm23, Degenerate };

ValidateScope parse_validate_scope(const std::string& text);

struct ValidateConfig {
    ValidateScope scope = ValidateScope::All;
    std::uint64_t seed = 0;
    std::string out; // empty: report goes to standard output
};

/// JSON config files mirror RunConfig/SweepConfig; see the parser for the
/// accepted keys. Unknown keys are rejected.
RunConfig run_config_from_json(const nlohmann::json& doc);
SweepConfig sweep_config_from_json(const nlohmann::json& doc);

/// Experiment-defining fields only (no output path/format, no worker count),
/// so identical experiments echo identical metadata.
nlohmann::ordered_json run_config_echo(const RunConfig& config);
nlohmann::ordered_json sweep_config_echo(const SweepConfig& config);

} // namespace multigrover
