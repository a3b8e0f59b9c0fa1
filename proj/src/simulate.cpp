#include "multigrover/simulate.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "multigrover/rng.hpp"

namespace multigrover {

namespace {

double marked_weight(const SearchProblem& problem, const Vector& x) {
    const Vector transformed = problem.v().apply_raw(x);
    double weight = 0.0;
    for (const Eigen::Index t : problem.targets().indices()) {
        weight += std::norm(transformed[t]);
    }
    return weight;
}

} // namespace

PrecheckVerdict precheck_from_ssq(double ssq) {
    if (ssq >= 1.0 - 1e-12) {
        return PrecheckVerdict::AlreadySolved;
    }
    if (ssq <= 0.25 * kMinCoupling * kMinCoupling) {
        return PrecheckVerdict::OrthogonalStart;
    }
    return PrecheckVerdict::Proceed;
}

PrecheckVerdict precheck_start(const SearchProblem& problem) {
    return precheck_from_ssq(compute_overlaps(problem).ssq);
}

IterationTrace run_search(const SearchProblem& problem, long m_max,
                          bool record_full, Vector* final_state) {
    if (m_max < 0) {
        throw std::invalid_argument("m_max must be nonnegative");
    }
    OverlapData overlaps = compute_overlaps(problem);
    const PrecheckVerdict verdict = precheck_from_ssq(overlaps.ssq);
    if (verdict != PrecheckVerdict::Proceed) {
        throw PrecheckError(verdict);
    }
    const ReducedModel model = build_reduced_model(std::move(overlaps));

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    IterationTrace trace;
    trace.has_full = record_full;
    trace.rows.reserve(static_cast<std::size_t>(m_max) + 1);

    CoefficientPair c{1.0, 0.0};
    Vector x;
    if (record_full) {
        x = problem.gamma().amplitudes();
    }
    for (long m = 0; m <= m_max; ++m) {
        if (m > 0) {
            c = reduced_step(model, c);
            if (record_full) {
                x = search_step_raw(problem, x);
                const double drift = std::abs(x.norm() - 1.0);
                if (drift > kNormTol) {
                    throw NumericalConsistencyError(
                        "iterate norm drifted by " + std::to_string(drift));
                }
            }
        }
        TraceRow row{m, c.c1, c.c2, success_probability(model, c), nan, nan};
        if (record_full) {
            row.p_full = marked_weight(problem, x);
            if (row.p_full > 1.0 + 1e-9) {
                throw NumericalConsistencyError(
                    "full-space success probability exceeds 1");
            }
            row.deviation = std::abs(row.p_full - row.p_reduced);
        }
        trace.rows.push_back(row);
    }
    if (final_state != nullptr && record_full) {
        *final_state = std::move(x);
    }
    return trace;
}

MeasurementOutcome measure(const StateVector& state, const TargetSet& targets,
                           const LinearOperator& v, std::uint64_t seed) {
    if (state.dim() != targets.dim() || state.dim() != v.dim()) {
        throw DimensionError("measurement dimensions do not match");
    }
    const Vector outcome = v.apply_raw(state.amplitudes());
    PortableRng rng(seed);
    const double u = rng.uniform();
    double cumulative = 0.0;
    Eigen::Index index = outcome.size() - 1;
    for (Eigen::Index k = 0; k < outcome.size(); ++k) {
        cumulative += std::norm(outcome[k]);
        if (u < cumulative) {
            index = k;
            break;
        }
    }
    return MeasurementOutcome{index, targets.contains(index)};
}

SubspaceBasis build_subspace_basis(const SearchProblem& problem) {
    const Eigen::Index n = problem.dim();
    const auto& targets = problem.targets().indices();
    const Eigen::Index l = problem.targets().count();

    SubspaceBasis basis;
    basis.vectors = Matrix::Zero(n, l + 1);
    basis.vectors.col(0) = problem.gamma().amplitudes();
    for (Eigen::Index j = 0; j < l; ++j) {
        Vector marked = Vector::Zero(n);
        marked[targets[static_cast<std::size_t>(j)]] = 1.0;
        basis.vectors.col(j + 1) = problem.v().apply_raw(marked, true);
    }
    basis.gram = basis.vectors.adjoint() * basis.vectors;

    Eigen::SelfAdjointEigenSolver<Matrix> solver(basis.gram,
                                                 Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() <= 1e-12) {
        throw DegenerateSubspaceError(
            "invariant-subspace basis is numerically dependent");
    }
    return basis;
}

double subspace_leak(const SubspaceBasis& basis, const Vector& x) {
    const Vector coeffs = basis.gram.ldlt().solve(basis.vectors.adjoint() * x);
    return (x - basis.vectors * coeffs).norm();
}

double subspace_leak_residual(const SearchProblem& problem, const StepFn& step,
                              long trials, std::uint64_t seed) {
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    const PrecheckVerdict verdict = precheck_start(problem);
    if (verdict != PrecheckVerdict::Proceed) {
        throw PrecheckError(verdict);
    }
    const SubspaceBasis basis = build_subspace_basis(problem);
    PortableRng rng(seed);
    double worst = 0.0;
    for (long trial = 0; trial < trials; ++trial) {
        Vector coeffs(basis.vectors.cols());
        for (Eigen::Index j = 0; j < coeffs.size(); ++j) {
            coeffs[j] = rng.normal_complex();
        }
        Vector sample = basis.vectors * coeffs;
        sample /= sample.norm();
        worst = std::max(worst, subspace_leak(basis, step(sample)));
    }
    return worst;
}

double invariance_residual(const SearchProblem& problem, long trials,
                           std::uint64_t seed) {
    return subspace_leak_residual(
        problem, [&](const Vector& x) { return search_step_raw(problem, x); },
        trials, seed);
}

double compare_full_reduced(const SearchProblem& problem, long m_max) {
    const IterationTrace trace = run_search(problem, m_max, true);
    double worst = 0.0;
    for (const TraceRow& row : trace.rows) {
        worst = std::max(worst, row.deviation);
    }
    return worst;
}

} // namespace multigrover
