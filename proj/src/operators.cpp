#include "multigrover/operators.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace multigrover {

TargetSet::TargetSet(Eigen::Index dim, std::vector<Eigen::Index> indices)
    : dim_(dim), indices_(std::move(indices)) {
    if (dim_ < 2) {
        throw DimensionError("target-set dimension must be at least 2, got " +
                             std::to_string(dim_));
    }
    if (indices_.empty()) {
        throw InvalidTargetError("target set must contain at least one index");
    }
    std::sort(indices_.begin(), indices_.end());
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] < 0 || indices_[i] >= dim_) {
            throw InvalidTargetError("target index " +
                                     std::to_string(indices_[i]) +
                                     " out of range for dimension " +
                                     std::to_string(dim_));
        }
        if (i > 0 && indices_[i] == indices_[i - 1]) {
            throw InvalidTargetError("duplicate target index " +
                                     std::to_string(indices_[i]));
        }
    }
}

bool TargetSet::contains(Eigen::Index index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

SearchProblem::SearchProblem(TargetSet targets, StateVector gamma,
                             LinearOperator v)
    : targets_(std::move(targets)), gamma_(std::move(gamma)),
      v_(std::move(v)) {
    if (targets_.dim() != gamma_.dim() || v_.dim() != gamma_.dim()) {
        throw DimensionError(
            "problem components disagree on dimension: targets " +
            std::to_string(targets_.dim()) + ", gamma " +
            std::to_string(gamma_.dim()) + ", V " + std::to_string(v_.dim()));
    }
}

namespace {

void flip_targets(const TargetSet& targets, Vector& x) {
    for (const Eigen::Index k : targets.indices()) {
        x[k] = -x[k];
    }
}

} // namespace

StateVector oracle_reflection(const TargetSet& targets, const StateVector& x) {
    if (targets.dim() != x.dim()) {
        throw DimensionError("oracle reflection: target set of dimension " +
                             std::to_string(targets.dim()) +
                             " applied to state of dimension " +
                             std::to_string(x.dim()));
    }
    Vector y = x.amplitudes();
    flip_targets(targets, y);
    return StateVector(std::move(y));
}

StateVector diffusion_reflection(const StateVector& gamma,
                                 const StateVector& x) {
    if (gamma.dim() != x.dim()) {
        throw DimensionError("diffusion reflection: gamma of dimension " +
                             std::to_string(gamma.dim()) +
                             " applied to state of dimension " +
                             std::to_string(x.dim()));
    }
    const Complex overlap = gamma.amplitudes().dot(x.amplitudes());
    Vector y = x.amplitudes() - 2.0 * overlap * gamma.amplitudes();
    return StateVector(std::move(y));
}

Vector search_step_raw(const SearchProblem& problem, Vector x) {
    Vector y = problem.v().apply_raw(x);
    flip_targets(problem.targets(), y);
    y = problem.v().apply_raw(y, /*adjoint=*/true);
    const Complex overlap = problem.gamma().amplitudes().dot(y);
    y -= 2.0 * overlap * problem.gamma().amplitudes();
    return -y;
}

StateVector search_step(const SearchProblem& problem, const StateVector& x) {
    if (problem.dim() != x.dim()) {
        throw DimensionError("search step: problem of dimension " +
                             std::to_string(problem.dim()) +
                             " applied to state of dimension " +
                             std::to_string(x.dim()));
    }
    return StateVector(search_step_raw(problem, x.amplitudes()));
}

Matrix materialize_search_operator(const SearchProblem& problem,
                                   Eigen::Index dense_limit) {
    const Eigen::Index n = problem.dim();
    if (n > dense_limit) {
        throw ResourceLimitError(
            "refusing to materialize the search operator at dimension " +
            std::to_string(n) + " (dense limit " +
            std::to_string(dense_limit) + ")");
    }
    Matrix u(n, n);
    Vector e = Vector::Zero(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        e[k] = 1.0;
        u.col(k) = search_step_raw(problem, e);
        e[k] = 0.0;
    }
    return u;
}

} // namespace multigrover
