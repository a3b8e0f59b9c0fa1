#pragma once

#include <vector>

#include "multigrover/hilbert.hpp"

namespace multigrover {

/// Sorted set of marked basis indices; the preimage of 1 under the oracle.
class TargetSet {
  public:
    TargetSet(Eigen::Index dim, std::vector<Eigen::Index> indices);

    Eigen::Index dim() const { return dim_; }
    Eigen::Index count() const {
        return static_cast<Eigen::Index>(indices_.size());
    }
    const std::vector<Eigen::Index>& indices() const { return indices_; }
    bool contains(Eigen::Index index) const;

  private:
    Eigen::Index dim_;
    std::vector<Eigen::Index> indices_; // sorted ascending
};

/// Full problem instance: dimension, marked indices, initial state gamma,
/// and the unitary V of the search operator U = -I_gamma V^-1 I_L V.
class SearchProblem {
  public:
    SearchProblem(TargetSet targets, StateVector gamma, LinearOperator v);

    Eigen::Index dim() const { return gamma_.dim(); }
    const TargetSet& targets() const { return targets_; }
    const StateVector& gamma() const { return gamma_; }
    const LinearOperator& v() const { return v_; }

  private:
    TargetSet targets_;
    StateVector gamma_;
    LinearOperator v_;
};

/// I_L: negate the amplitude at every marked index. Exactly self-inverse.
StateVector oracle_reflection(const TargetSet& targets, const StateVector& x);

/// I_gamma: x - 2<gamma|x> gamma, the reflection about the hyperplane
/// orthogonal to gamma.
StateVector diffusion_reflection(const StateVector& gamma,
                                 const StateVector& x);

/// One application of U = -I_gamma V^-1 I_L V, computed matrix-free as four
/// passes (V, sign flips, V^-1, rank-one update + global sign).
StateVector search_step(const SearchProblem& problem, const StateVector& x);

/// Unchecked working-vector form of search_step.
Vector search_step_raw(const SearchProblem& problem, Vector x);

/// Dense N x N form of the search operator, built column by column.
Matrix materialize_search_operator(const SearchProblem& problem,
                                   Eigen::Index dense_limit = kDenseLimit);

} // namespace multigrover
