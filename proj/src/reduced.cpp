#include "multigrover/reduced.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace multigrover {

namespace {

// ssq <= (kMinCoupling/2)^2 means a <= kMinCoupling.
void require_coupled(double ssq) {
    if (ssq <= 0.25 * kMinCoupling * kMinCoupling) {
        throw OrthogonalStartError(
            "transformed start state is orthogonal to the marked subspace "
            "(a <= 1e-9)");
    }
}

} // namespace

OverlapData compute_overlaps(const SearchProblem& problem) {
    const Vector transformed = problem.v().apply_raw(problem.gamma().amplitudes());
    const auto& targets = problem.targets().indices();
    Vector mu(static_cast<Eigen::Index>(targets.size()));
    for (Eigen::Index j = 0; j < mu.size(); ++j) {
        mu[j] = transformed[targets[static_cast<std::size_t>(j)]];
    }
    const double ssq = mu.squaredNorm();
    return OverlapData{std::move(mu), ssq};
}

ReducedModel build_reduced_model(OverlapData overlaps) {
    require_coupled(overlaps.ssq);
    const double a = 2.0 * std::sqrt(overlaps.ssq);
    ReducedModel model;
    model.a = a;
    model.m2 << 1.0 - a * a, a, -a, 1.0;
    // Equivalent to arccos(1 - a^2/2) but conditioned well near a = 0.
    model.theta = 2.0 * std::asin(std::min(a / 2.0, 1.0));
    model.overlaps = std::move(overlaps);
    return model;
}

StateVector mu_state(const SearchProblem& problem,
                     const OverlapData& overlaps) {
    require_coupled(overlaps.ssq);
    const double a = 2.0 * std::sqrt(overlaps.ssq);
    Vector marked = Vector::Zero(problem.dim());
    const auto& targets = problem.targets().indices();
    for (Eigen::Index j = 0; j < overlaps.mu.size(); ++j) {
        marked[targets[static_cast<std::size_t>(j)]] = overlaps.mu[j];
    }
    Vector result = problem.v().apply_raw(marked, true);
    result *= 2.0 / a;
    return StateVector(std::move(result));
}

Matrix big_m_matrix(const OverlapData& overlaps) {
    const Eigen::Index l = overlaps.mu.size();
    Matrix m = Matrix::Identity(l + 1, l + 1);
    m(0, 0) = 1.0 - 4.0 * overlaps.ssq;
    for (Eigen::Index j = 0; j < l; ++j) {
        m(0, j + 1) = 2.0 * overlaps.mu[j];
        m(j + 1, 0) = -2.0 * std::conj(overlaps.mu[j]);
    }
    return m;
}

CoefficientPair reduced_step(const ReducedModel& model, CoefficientPair c) {
    return CoefficientPair{model.m2(0, 0) * c.c1 + model.m2(1, 0) * c.c2,
                           model.m2(0, 1) * c.c1 + model.m2(1, 1) * c.c2};
}

CoefficientPair iterate_reduced(const ReducedModel& model, long steps) {
    if (steps < 0) {
        throw std::invalid_argument("iteration count must be nonnegative");
    }
    CoefficientPair c{1.0, 0.0};
    for (long m = 0; m < steps; ++m) {
        c = reduced_step(model, c);
    }
    return c;
}

double success_probability(const ReducedModel& model, CoefficientPair c) {
    const double amplitude = c.c1 * (model.a / 2.0) + c.c2;
    const double p = amplitude * amplitude;
    if (p > 1.0 + 1e-9) {
        throw NumericalConsistencyError(
            "success probability " + std::to_string(p) + " exceeds 1");
    }
    return std::min(p, 1.0);
}

long optimal_iteration_count(const ReducedModel& model, IterationMode mode) {
    if (mode == IterationMode::Paper) {
        return std::llround(std::numbers::pi / (2.0 * model.a));
    }
    const long window =
        static_cast<long>(std::ceil(std::numbers::pi / model.theta)) + 1;
    CoefficientPair c{1.0, 0.0};
    long best_m = 0;
    double best_p = success_probability(model, c);
    for (long m = 1; m <= window; ++m) {
        c = reduced_step(model, c);
        const double p = success_probability(model, c);
        if (p > best_p) {
            best_p = p;
            best_m = m;
        }
    }
    return best_m;
}

} // namespace multigrover
