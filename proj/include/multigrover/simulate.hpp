#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "multigrover/reduced.hpp"

namespace multigrover {

/// One record of an iteration trace. p_full and deviation are NaN unless the
/// full-space pass was recorded.
struct TraceRow {
    long m;
    double c1;
    double c2;
    double p_reduced;
    double p_full;
    double deviation;
};

struct IterationTrace {
    std::vector<TraceRow> rows;
    bool has_full = false;
};

/// Basis of the invariant subspace spanned by |gamma> and the V^-1|w_j>
/// (in that order), with its Gram matrix. The basis is not orthogonal.
struct SubspaceBasis {
    Matrix vectors; // N x (l+1), one basis vector per column
    Matrix gram;    // (l+1) x (l+1), Hermitian positive definite
};

/// Decides whether iterating is meaningful before any work is done:
/// AlreadySolved when ||P_L V gamma||^2 >= 1 - 1e-12, OrthogonalStart when
/// it is <= (1e-9/2)^2, Proceed otherwise.
PrecheckVerdict precheck_start(const SearchProblem& problem);

/// Verdict for a precomputed squared overlap, same thresholds as above.
PrecheckVerdict precheck_from_ssq(double ssq);

/// Iterates the reduced recursion (and, when record_full is set, the
/// full-space operator alongside it) for m = 0..m_max. Throws PrecheckError
/// unless the precheck verdict is Proceed. When final_state is non-null and
/// record_full is set, receives the full-space iterate at m = m_max.
IterationTrace run_search(const SearchProblem& problem, long m_max,
                          bool record_full, Vector* final_state = nullptr);

/// Applies V to the state and samples a basis index from the outcome
/// distribution with the seeded portable generator.
struct MeasurementOutcome {
    Eigen::Index index;
    bool hit;
};
MeasurementOutcome measure(const StateVector& state, const TargetSet& targets,
                           const LinearOperator& v, std::uint64_t seed);

/// Basis of span({|gamma>} + V^-1(L)). Throws DegenerateSubspaceError when
/// the Gram matrix is numerically singular (V|gamma> too close to L).
SubspaceBasis build_subspace_basis(const SearchProblem& problem);

/// Norm of the component of x orthogonal to the subspace, via the oblique
/// (Gram-matrix) projector onto it.
double subspace_leak(const SubspaceBasis& basis, const Vector& x);

using StepFn = std::function<Vector(const Vector&)>;

/// Max over trials of the leak of step(v) outside the invariant subspace,
/// for random unit combinations v of the subspace basis.
double subspace_leak_residual(const SearchProblem& problem, const StepFn& step,
                              long trials, std::uint64_t seed);

/// The above with step = one application of the search operator U.
double invariance_residual(const SearchProblem& problem, long trials,
                           std::uint64_t seed);

/// Max over m <= m_max of |p_full(m) - p_reduced(m)|.
double compare_full_reduced(const SearchProblem& problem, long m_max);

} // namespace multigrover
