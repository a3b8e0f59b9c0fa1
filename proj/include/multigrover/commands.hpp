#pragma once

#include <ostream>

#include "multigrover/config.hpp"
#include "multigrover/io.hpp"

namespace multigrover {

// Exit codes shared by every subcommand: 0 success, 2 precheck verdict other
// than Proceed, 1 any other error. Artifacts go to `out` unless the config
// names a file; diagnostics and summaries go to `err`.

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err);

int cmd_validate(const ValidateConfig& config, std::ostream& out,
                 std::ostream& err);

/// Sweep evaluation for one point, exposed for tests.
SweepRow eval_sweep_point(const RunConfig& point, std::uint64_t value);

} // namespace multigrover
