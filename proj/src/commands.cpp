#include "multigrover/commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "multigrover/rng.hpp"
#include "multigrover/validate.hpp"
#include "multigrover/version.hpp"

namespace multigrover {

namespace {

nlohmann::ordered_json make_metadata(const char* command,
                                     nlohmann::ordered_json config_echo) {
    nlohmann::ordered_json metadata;
    metadata["command"] = command;
    metadata["config"] = std::move(config_echo);
    metadata["generator"] = PortableRng::kName;
    metadata["version"] = kVersion;
    return metadata;
}

void emit_artifact(const std::string& path, const std::string& artifact,
                   std::ostream& out) {
    if (path.empty()) {
        out << artifact;
    } else {
        write_text_file(path, artifact);
    }
}

long choose_iterations(const IterationsSpec& spec, const ReducedModel& model) {
    switch (spec.mode) {
    case IterationsSpec::Mode::AutoPaper:
        return optimal_iteration_count(model, IterationMode::Paper);
    case IterationsSpec::Mode::AutoExact:
        return optimal_iteration_count(model, IterationMode::Exact);
    default:
        return spec.count;
    }
}

} // namespace

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const SearchProblem problem = make_problem(
            config.targets, config.gamma, config.unitary, config.n);
        OverlapData overlaps = compute_overlaps(problem);
        const PrecheckVerdict verdict = precheck_from_ssq(overlaps.ssq);
        if (verdict != PrecheckVerdict::Proceed) {
            err << "precheck verdict: " << to_string(verdict) << "\n";
            return 2;
        }
        const ReducedModel model = build_reduced_model(std::move(overlaps));
        const long m = choose_iterations(config.iterations, model);

        Vector final_state;
        const IterationTrace trace =
            run_search(problem, m, config.record_full, &final_state);

        std::string artifact;
        if (config.format == OutputFormat::Csv) {
            artifact = trace_csv(trace);
        } else {
            artifact =
                trace_json(trace, make_metadata("run", run_config_echo(config)))
                    .dump(2) +
                "\n";
        }
        emit_artifact(config.out, artifact, out);

        const TraceRow& last = trace.rows.back();
        const double p_final = config.record_full ? last.p_full : last.p_reduced;
        err << "run: a=" << format_double(model.a)
            << " theta=" << format_double(model.theta) << " m=" << m
            << " p_final=" << format_double(p_final) << "\n";

        if (config.measure_seed.has_value()) {
            if (!config.record_full) {
                final_state = problem.gamma().amplitudes();
                for (long k = 0; k < m; ++k) {
                    final_state = search_step_raw(problem, final_state);
                }
            }
            const MeasurementOutcome outcome =
                measure(StateVector(std::move(final_state)), problem.targets(),
                        problem.v(), *config.measure_seed);
            err << "measured: index=" << outcome.index
                << " hit=" << (outcome.hit ? "true" : "false") << "\n";
        }
        return 0;
    } catch (const PrecheckError& e) {
        err << "precheck verdict: " << to_string(e.verdict()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

SweepRow eval_sweep_point(const RunConfig& point, std::uint64_t value) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    SweepRow row{value, point.n, 0, PrecheckVerdict::Proceed,
                 nan,   -1,      -1, nan,
                 nan,   nan};
    const SearchProblem problem =
        make_problem(point.targets, point.gamma, point.unitary, point.n);
    row.l = problem.targets().count();
    OverlapData overlaps = compute_overlaps(problem);
    row.verdict = precheck_from_ssq(overlaps.ssq);
    if (row.verdict != PrecheckVerdict::Proceed) {
        return row;
    }
    const ReducedModel model = build_reduced_model(std::move(overlaps));
    row.a = model.a;
    row.m_paper = optimal_iteration_count(model, IterationMode::Paper);
    row.m_exact = optimal_iteration_count(model, IterationMode::Exact);
    const long m_max = std::max(row.m_paper, row.m_exact);
    const IterationTrace trace = run_search(problem, m_max, true);
    row.p_at_m_paper =
        trace.rows[static_cast<std::size_t>(row.m_paper)].p_full;
    row.p_at_m_exact =
        trace.rows[static_cast<std::size_t>(row.m_exact)].p_full;
    double worst = 0.0;
    for (const TraceRow& record : trace.rows) {
        worst = std::max(worst, record.deviation);
    }
    row.max_deviation = worst;
    return row;
}

namespace {

RunConfig sweep_point_config(const SweepConfig& config, std::uint64_t value) {
    RunConfig point = config.base;
    switch (config.axis) {
    case SweepAxis::N:
        point.n = static_cast<Eigen::Index>(value);
        break;
    case SweepAxis::TargetCount:
        if (point.targets.tag != TargetsSpec::Tag::Sampled) {
            throw std::invalid_argument(
                "sweeping the target count requires sampled targets "
                "(count:k@seed)");
        }
        point.targets.count = static_cast<Eigen::Index>(value);
        break;
    default:
        if (point.unitary.tag != UnitarySpec::Tag::Haar) {
            throw std::invalid_argument(
                "sweeping the seed requires a haar unitary");
        }
        point.unitary.seed = value;
        break;
    }
    return point;
}

} // namespace

int cmd_sweep(const SweepConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const std::size_t points = config.values.size();
        std::vector<SweepRow> rows(points);

        const auto worker_count = static_cast<std::size_t>(config.workers);
        if (worker_count <= 1 || points <= 1) {
            for (std::size_t i = 0; i < points; ++i) {
                rows[i] = eval_sweep_point(
                    sweep_point_config(config, config.values[i]),
                    config.values[i]);
            }
        } else {
            std::atomic<std::size_t> next{0};
            std::exception_ptr failure;
            std::mutex failure_mutex;
            auto work = [&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= points) {
                        return;
                    }
                    try {
                        rows[i] = eval_sweep_point(
                            sweep_point_config(config, config.values[i]),
                            config.values[i]);
                    } catch (...) {
                        const std::lock_guard<std::mutex> lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                        next.store(points);
                        return;
                    }
                }
            };
            std::vector<std::thread> threads;
            threads.reserve(std::min(worker_count, points));
            for (std::size_t k = 0; k < std::min(worker_count, points); ++k) {
                threads.emplace_back(work);
            }
            for (std::thread& thread : threads) {
                thread.join();
            }
            if (failure) {
                std::rethrow_exception(failure);
            }
        }

        std::string artifact;
        if (config.base.format == OutputFormat::Csv) {
            artifact = sweep_csv(rows);
        } else {
            artifact = sweep_json(rows, make_metadata(
                                            "sweep", sweep_config_echo(config)))
                           .dump(2) +
                       "\n";
        }
        emit_artifact(config.base.out, artifact, out);

        std::size_t proceed = 0;
        for (const SweepRow& row : rows) {
            proceed += row.verdict == PrecheckVerdict::Proceed ? 1 : 0;
        }
        err << "sweep: points=" << points << " proceed=" << proceed
            << " skipped=" << points - proceed << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cmd_validate(const ValidateConfig& config, std::ostream& out,
                 std::ostream& err) {
    try {
        std::vector<FamilyReport> reports;
        const ValidateScope scope = config.scope;
        if (scope == ValidateScope::All || scope == ValidateScope::Lemma21) {
            reports.push_back(run_lemma21_family(config.seed));
        }
        if (scope == ValidateScope::All || scope == ValidateScope::Lemma22) {
            reports.push_back(run_lemma22_family(config.seed));
        }
        if (scope == ValidateScope::All || scope == ValidateScope::Thm23) {
            reports.push_back(run_thm23_family(config.seed));
        }
        if (scope == ValidateScope::All ||
            scope == ValidateScope::Degenerate) {
            reports.push_back(run_degenerate_family(config.seed));
        }

        std::string text = "validate: seed=" + std::to_string(config.seed) +
                           "\n";
        bool pass = true;
        for (const FamilyReport& report : reports) {
            text += format_family_report(report);
            pass = pass && report.pass;
        }
        text += std::string("overall: ") + (pass ? "PASS" : "FAIL") + "\n";
        emit_artifact(config.out, text, out);
        err << "validate: " << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace multigrover
