#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "multigrover/commands.hpp"
#include "multigrover/rng.hpp"
#include "multigrover/version.hpp"

using namespace multigrover;

namespace {

RunConfig basic_run(Eigen::Index n, const std::string& targets,
                    const std::string& unitary, const std::string& gamma) {
    RunConfig config;
    config.n = n;
    config.targets = parse_targets_spec(targets);
    config.unitary = parse_unitary_spec(unitary);
    config.gamma = parse_state_spec(gamma);
    return config;
}

std::vector<std::string> csv_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> csv_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (start <= line.size()) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            cells.push_back(line.substr(start));
            break;
        }
        cells.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return cells;
}

double summary_value(const std::string& err_text, const std::string& key) {
    const auto pos = err_text.find(key + "=");
    REQUIRE(pos != std::string::npos);
    return std::strtod(err_text.c_str() + pos + key.size() + 1, nullptr);
}

} // namespace

TEST_CASE("run command walks the hadamard search and reports a summary") {
    RunConfig config = basic_run(16, "idx:0", "walsh-hadamard", "basis:0");
    config.record_full = true;
    std::ostringstream out, err;
    CHECK(cmd_run(config, out, err) == 0);

    const auto lines = csv_lines(out.str());
    REQUIRE(lines.size() == 5); // header + m = 0..3
    CHECK(lines[0] == "m,c1,c2,p_reduced,p_full,deviation");
    CHECK(csv_cells(lines[1])[0] == "0");
    CHECK(csv_cells(lines[4])[0] == "3");

    CHECK(err.str().rfind("run: a=", 0) == 0);
    CHECK(std::abs(summary_value(err.str(), "a") - 0.5) <= 1e-14);
    CHECK(summary_value(err.str(), "m") == 3.0);
    CHECK(summary_value(err.str(), "p_final") > 0.9);
}

TEST_CASE("run command reproduces the large reference search") {
    RunConfig config = basic_run(1024, "idx:0", "walsh-hadamard", "basis:0");
    config.record_full = true;
    std::ostringstream out, err;
    CHECK(cmd_run(config, out, err) == 0);
    CHECK(err.str().find(" m=25 ") != std::string::npos);
    CHECK(summary_value(err.str(), "p_final") >= 0.999);
    CHECK(csv_lines(out.str()).size() == 27); // header + m = 0..25
}

TEST_CASE("run command surfaces precheck verdicts with exit code 2") {
    std::ostringstream out, err;
    CHECK(cmd_run(basic_run(2, "idx:0,1", "identity", "uniform"), out, err) ==
          2);
    CHECK(err.str().find("precheck verdict: AlreadySolved") !=
          std::string::npos);
    CHECK(out.str().empty());

    std::ostringstream out2, err2;
    CHECK(cmd_run(basic_run(4, "idx:1", "identity", "basis:0"), out2, err2) ==
          2);
    CHECK(err2.str().find("precheck verdict: OrthogonalStart") !=
          std::string::npos);
}

TEST_CASE("run command maps construction failures to exit code 1") {
    std::ostringstream out, err;
    CHECK(cmd_run(basic_run(6, "idx:0", "walsh-hadamard", "uniform"), out,
                  err) == 1);
    CHECK(err.str().rfind("error: ", 0) == 0);
}

TEST_CASE("run command measures when asked") {
    RunConfig config = basic_run(4, "idx:0", "identity", "uniform");
    config.iterations = parse_iterations_spec("1");
    config.measure_seed = 9;
    std::ostringstream out, err;
    CHECK(cmd_run(config, out, err) == 0);
    // One classic step makes the marked index certain.
    CHECK(err.str().find("measured: index=0 hit=true") != std::string::npos);
}

TEST_CASE("run command JSON artifact carries the provenance metadata") {
    RunConfig config = basic_run(4, "idx:0", "identity", "uniform");
    config.iterations = parse_iterations_spec("1");
    config.format = OutputFormat::Json;
    std::ostringstream out, err;
    CHECK(cmd_run(config, out, err) == 0);

    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["metadata"]["command"] == "run");
    CHECK(doc["metadata"]["generator"] == PortableRng::kName);
    CHECK(doc["metadata"]["version"] == kVersion);
    CHECK(doc["metadata"]["config"]["n"] == 4);
    CHECK(doc["metadata"]["config"]["targets"] == "idx:0");
    CHECK_FALSE(doc["metadata"]["config"].contains("out"));
    REQUIRE(doc["rows"].size() == 2);
    CHECK_FALSE(doc["rows"][0].contains("p_full"));
}

TEST_CASE("sweep over the dimension tracks the square-root law") {
    SweepConfig sweep;
    sweep.base = basic_run(64, "idx:0", "identity", "uniform");
    sweep.axis = parse_sweep_axis("n");
    sweep.values = {64, 256, 1024};
    std::ostringstream out, err;
    CHECK(cmd_sweep(sweep, out, err) == 0);
    CHECK(err.str().find("sweep: points=3 proceed=3 skipped=0") !=
          std::string::npos);

    const auto lines = csv_lines(out.str());
    REQUIRE(lines.size() == 4);
    // m_paper = round(pi * sqrt(N) / 4) for one marked item of N.
    const long expected[] = {6, 13, 25};
    for (int k = 0; k < 3; ++k) {
        const auto cells = csv_cells(lines[static_cast<std::size_t>(k) + 1]);
        REQUIRE(cells.size() == 10);
        CHECK(cells[4] == std::to_string(expected[k]));
        CHECK(cells[9] == "Proceed");
    }
}

TEST_CASE("sweep over the target count tracks the coupling formula") {
    SweepConfig sweep;
    sweep.base = basic_run(256, "count:1@5", "identity", "uniform");
    sweep.axis = parse_sweep_axis("l");
    sweep.values = {1, 2, 4};
    std::ostringstream out, err;
    CHECK(cmd_sweep(sweep, out, err) == 0);

    const auto lines = csv_lines(out.str());
    REQUIRE(lines.size() == 4);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto cells = csv_cells(lines[k]);
        const double l = std::strtod(cells[2].c_str(), nullptr);
        const double a = std::strtod(cells[3].c_str(), nullptr);
        CHECK(std::abs(a - 2.0 * std::sqrt(l / 256.0)) <= 1e-13);
    }
}

TEST_CASE("sweep over haar seeds keeps the reduced model faithful") {
    SweepConfig sweep;
    sweep.base = basic_run(32, "count:2@9", "haar:0", "random:3");
    sweep.axis = parse_sweep_axis("seed");
    sweep.values = {1, 2, 3};
    std::ostringstream out, err;
    CHECK(cmd_sweep(sweep, out, err) == 0);

    const auto lines = csv_lines(out.str());
    REQUIRE(lines.size() == 4);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto cells = csv_cells(lines[k]);
        CHECK(cells[9] == "Proceed");
        CHECK(std::strtod(cells[8].c_str(), nullptr) <= 1e-9);
    }
}

TEST_CASE("sweep artifacts are identical for any worker count") {
    for (const char* format : {"csv", "json"}) {
        SweepConfig sweep;
        sweep.base = basic_run(64, "count:2@9", "haar:0", "random:3");
        sweep.base.format = parse_output_format(format);
        sweep.axis = parse_sweep_axis("seed");
        sweep.values = {1, 2, 3, 4, 5, 6};

        sweep.workers = 1;
        std::ostringstream serial_out, serial_err;
        CHECK(cmd_sweep(sweep, serial_out, serial_err) == 0);

        sweep.workers = 4;
        std::ostringstream parallel_out, parallel_err;
        CHECK(cmd_sweep(sweep, parallel_out, parallel_err) == 0);

        CHECK(serial_out.str() == parallel_out.str());
    }
}

TEST_CASE("sweep rejects axes that do not apply to the base config") {
    SweepConfig sweep;
    sweep.base = basic_run(64, "idx:0", "identity", "uniform");
    sweep.axis = parse_sweep_axis("l");
    sweep.values = {1, 2};
    std::ostringstream out, err;
    CHECK(cmd_sweep(sweep, out, err) == 1);
    CHECK(err.str().rfind("error: ", 0) == 0);

    sweep.axis = parse_sweep_axis("seed");
    std::ostringstream out2, err2;
    CHECK(cmd_sweep(sweep, out2, err2) == 1);
    CHECK(err2.str().rfind("error: ", 0) == 0);
}

TEST_CASE("validate runs a family deterministically") {
    ValidateConfig config;
    config.scope = parse_validate_scope("degenerate");
    config.seed = 0;

    std::ostringstream out1, err1;
    CHECK(cmd_validate(config, out1, err1) == 0);
    CHECK(out1.str().find("validate: seed=0") != std::string::npos);
    CHECK(out1.str().find("family degenerate: PASS") != std::string::npos);
    CHECK(out1.str().find("overall: PASS") != std::string::npos);
    CHECK(err1.str().find("validate: PASS") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cmd_validate(config, out2, err2) == 0);
    CHECK(out1.str() == out2.str());
}
