#include "multigrover/config.hpp"

#include <charconv>
#include <stdexcept>

namespace multigrover {

namespace {

[[noreturn]] void bad_spec(const std::string& what, const std::string& text) {
    throw std::invalid_argument("invalid " + what + " spec: '" + text + "'");
}

std::uint64_t parse_u64(const std::string& what, const std::string& text) {
    std::uint64_t value = 0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() ||
        text.empty()) {
        bad_spec(what, text);
    }
    return value;
}

/// Splits "tag:payload"; payload is empty when there is no colon.
std::pair<std::string, std::string> split_tag(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        return {text, ""};
    }
    return {text.substr(0, colon), text.substr(colon + 1)};
}

} // namespace

UnitarySpec parse_unitary_spec(const std::string& text) {
    const auto [tag, payload] = split_tag(text);
    if (tag == "identity" && payload.empty()) {
        return UnitarySpec::identity();
    }
    if (tag == "walsh-hadamard" && payload.empty()) {
        return UnitarySpec::walsh_hadamard();
    }
    if (tag == "haar") {
        return UnitarySpec::haar(parse_u64("unitary", payload));
    }
    if (tag == "file" && !payload.empty()) {
        return UnitarySpec::file(payload);
    }
    bad_spec("unitary", text);
}

StateSpec parse_state_spec(const std::string& text) {
    const auto [tag, payload] = split_tag(text);
    if (tag == "uniform" && payload.empty()) {
        return StateSpec::uniform();
    }
    if (tag == "basis") {
        return StateSpec::basis(
            static_cast<Eigen::Index>(parse_u64("gamma", payload)));
    }
    if (tag == "random") {
        return StateSpec::random(parse_u64("gamma", payload));
    }
    if (tag == "file" && !payload.empty()) {
        return StateSpec::file(payload);
    }
    bad_spec("gamma", text);
}

TargetsSpec parse_targets_spec(const std::string& text) {
    const auto [tag, payload] = split_tag(text);
    if (tag == "idx" && !payload.empty()) {
        std::vector<Eigen::Index> indices;
        std::size_t start = 0;
        while (start <= payload.size()) {
            const auto comma = payload.find(',', start);
            const std::string item =
                payload.substr(start, comma == std::string::npos
                                          ? std::string::npos
                                          : comma - start);
            indices.push_back(
                static_cast<Eigen::Index>(parse_u64("targets", item)));
            start = comma == std::string::npos ? payload.size() + 1 : comma + 1;
        }
        return TargetsSpec::explicit_list(std::move(indices));
    }
    if (tag == "count") {
        const auto at = payload.find('@');
        if (at == std::string::npos) {
            bad_spec("targets", text);
        }
        const auto count = static_cast<Eigen::Index>(
            parse_u64("targets", payload.substr(0, at)));
        return TargetsSpec::sampled(count,
                                    parse_u64("targets", payload.substr(at + 1)));
    }
    bad_spec("targets", text);
}

std::string format_unitary_spec(const UnitarySpec& spec) {
    switch (spec.tag) {
    case UnitarySpec::Tag::Identity:
        return "identity";
    case UnitarySpec::Tag::WalshHadamard:
        return "walsh-hadamard";
    case UnitarySpec::Tag::Haar:
        return "haar:" + std::to_string(spec.seed);
    default:
        return "file:" + spec.path;
    }
}

std::string format_state_spec(const StateSpec& spec) {
    switch (spec.tag) {
    case StateSpec::Tag::Uniform:
        return "uniform";
    case StateSpec::Tag::Basis:
        return "basis:" + std::to_string(spec.index);
    case StateSpec::Tag::Random:
        return "random:" + std::to_string(spec.seed);
    default:
        return "file:" + spec.path;
    }
}

std::string format_targets_spec(const TargetsSpec& spec) {
    if (spec.tag == TargetsSpec::Tag::Sampled) {
        return "count:" + std::to_string(spec.count) + "@" +
               std::to_string(spec.seed);
    }
    std::string out = "idx:";
    for (std::size_t k = 0; k < spec.indices.size(); ++k) {
        if (k > 0) {
            out += ',';
        }
        out += std::to_string(spec.indices[k]);
    }
    return out;
}

IterationsSpec parse_iterations_spec(const std::string& text) {
    if (text == "auto-paper") {
        return {IterationsSpec::Mode::AutoPaper, 0};
    }
    if (text == "auto-exact") {
        return {IterationsSpec::Mode::AutoExact, 0};
    }
    return {IterationsSpec::Mode::Fixed,
            static_cast<long>(parse_u64("iterations", text))};
}

std::string format_iterations_spec(const IterationsSpec& spec) {
    switch (spec.mode) {
    case IterationsSpec::Mode::AutoPaper:
        return "auto-paper";
    case IterationsSpec::Mode::AutoExact:
        return "auto-exact";
    default:
        return std::to_string(spec.count);
    }
}

OutputFormat parse_output_format(const std::string& text) {
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    bad_spec("format", text);
}

SweepAxis parse_sweep_axis(const std::string& text) {
    if (text == "n") {
        return SweepAxis::N;
    }
    if (text == "l") {
        return SweepAxis::TargetCount;
    }
    if (text == "seed") {
        return SweepAxis::Seed;
    }
    bad_spec("axis", text);
}

ValidateScope parse_validate_scope(const std::string& text) {
    if (text == "all") {
        return ValidateScope::All;
    }
    if (text == "lemma21") {
        return ValidateScope::Lemma21;
    }
    if (text == "lemma22") {
        return ValidateScope::Lemma22;
    }
    if (text == "thm23") {
        return ValidateScope::Thm23;
    }
    if (text == "degenerate") {
        return ValidateScope::Degenerate;
    }
    bad_spec("scope", text);
}

namespace {

void reject_unknown_keys(const nlohmann::json& doc,
                         std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& [key, value] : doc.items()) {
        bool found = false;
        for (const char* name : known) {
            found = found || key == name;
        }
        if (!found) {
            throw std::invalid_argument("unknown " + where + " config key '" +
                                        key + "'");
        }
    }
}

std::string require_string(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_string()) {
        throw std::invalid_argument(std::string("config key '") + key +
                                    "' must be a string");
    }
    return doc[key].get<std::string>();
}

} // namespace

RunConfig run_config_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("run config must be a JSON object");
    }
    reject_unknown_keys(doc,
                        {"n", "targets", "unitary", "gamma", "iterations",
                         "record_full", "measure_seed", "out", "format"},
                        "run");
    RunConfig config;
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw std::invalid_argument("config key 'n' must be an integer");
    }
    config.n = doc["n"].get<Eigen::Index>();
    config.targets = parse_targets_spec(require_string(doc, "targets"));
    config.unitary = doc.contains("unitary")
                         ? parse_unitary_spec(require_string(doc, "unitary"))
                         : UnitarySpec::identity();
    config.gamma = doc.contains("gamma")
                       ? parse_state_spec(require_string(doc, "gamma"))
                       : StateSpec::uniform();
    config.iterations =
        doc.contains("iterations")
            ? parse_iterations_spec(require_string(doc, "iterations"))
            : IterationsSpec{IterationsSpec::Mode::AutoPaper, 0};
    if (doc.contains("record_full")) {
        if (!doc["record_full"].is_boolean()) {
            throw std::invalid_argument(
                "config key 'record_full' must be a boolean");
        }
        config.record_full = doc["record_full"].get<bool>();
    }
    if (doc.contains("measure_seed") && !doc["measure_seed"].is_null()) {
        if (!doc["measure_seed"].is_number_unsigned()) {
            throw std::invalid_argument(
                "config key 'measure_seed' must be a nonnegative integer");
        }
        config.measure_seed = doc["measure_seed"].get<std::uint64_t>();
    }
    if (doc.contains("out")) {
        config.out = require_string(doc, "out");
    }
    if (doc.contains("format")) {
        config.format = parse_output_format(require_string(doc, "format"));
    }
    return config;
}

SweepConfig sweep_config_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw std::invalid_argument("sweep config must be a JSON object");
    }
    reject_unknown_keys(doc, {"base", "axis", "values", "workers"}, "sweep");
    if (!doc.contains("base")) {
        throw std::invalid_argument("sweep config needs a 'base' run config");
    }
    SweepConfig config;
    config.base = run_config_from_json(doc["base"]);
    config.axis = parse_sweep_axis(require_string(doc, "axis"));
    if (!doc.contains("values") || !doc["values"].is_array() ||
        doc["values"].empty()) {
        throw std::invalid_argument(
            "sweep config needs a nonempty 'values' array");
    }
    for (const auto& value : doc["values"]) {
        if (!value.is_number_unsigned()) {
            throw std::invalid_argument(
                "sweep values must be nonnegative integers");
        }
        config.values.push_back(value.get<std::uint64_t>());
    }
    if (doc.contains("workers")) {
        if (!doc["workers"].is_number_integer() ||
            doc["workers"].get<int>() < 1) {
            throw std::invalid_argument(
                "config key 'workers' must be a positive integer");
        }
        config.workers = doc["workers"].get<int>();
    }
    return config;
}

nlohmann::ordered_json run_config_echo(const RunConfig& config) {
    nlohmann::ordered_json echo;
    echo["n"] = config.n;
    echo["targets"] = format_targets_spec(config.targets);
    echo["unitary"] = format_unitary_spec(config.unitary);
    echo["gamma"] = format_state_spec(config.gamma);
    echo["iterations"] = format_iterations_spec(config.iterations);
    echo["record_full"] = config.record_full;
    echo["measure_seed"] = config.measure_seed.has_value()
                               ? nlohmann::ordered_json(*config.measure_seed)
                               : nlohmann::ordered_json(nullptr);
    return echo;
}

nlohmann::ordered_json sweep_config_echo(const SweepConfig& config) {
    nlohmann::ordered_json echo;
    echo["base"] = run_config_echo(config.base);
    echo["axis"] = config.axis == SweepAxis::N
                       ? "n"
                       : (config.axis == SweepAxis::TargetCount ? "l" : "seed");
    echo["values"] = config.values;
    return echo;
}

} // namespace multigrover
