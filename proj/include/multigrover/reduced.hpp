#pragma once

#include "multigrover/operators.hpp"

// Two-dimensional reduction of the search dynamics.
//
// With mu_j = <w_j|V|gamma> over the marked indices and
// a = 2*sqrt(sum_j |mu_j|^2), the unit vector
//
//     |mu> = (2/a) sum_j mu_j V^-1 |w_j>
//
// spans, together with |gamma>, a plane that the search operator U maps to
// itself: U|gamma> = (1-a^2)|gamma> + a|mu> and U|mu> = -a|gamma> + |mu>.
// Coefficients (c1, c2) of c1|gamma> + c2|mu> therefore evolve by the
// transpose of M = [[1-a^2, a], [-a, 1]], starting from (1, 0).
//
// The basis {|gamma>, |mu>} is not orthogonal: <gamma|mu> = a/2, so the
// squared norm of c1|gamma> + c2|mu> is c1^2 + c2^2 + a*c1*c2.
//
// Success probability in closed form: measuring V applied to the current
// state hits the marked subspace L with probability |P_L V state|^2.  Now
// V|mu> = (2/a) sum_j mu_j |w_j> lies entirely in L and has unit norm, and
// projecting V|gamma> onto L gives sum_j mu_j |w_j> = (a/2) V|mu>.  Hence
//
//     P_L V (c1|gamma> + c2|mu>) = (c1*a/2 + c2) V|mu>
//
// and the success probability is |c1*a/2 + c2|^2.

namespace multigrover {

/// Overlaps of the transformed start state with the marked basis states.
struct OverlapData {
    Vector mu; // mu_j = <w_j|V|gamma>, ascending target order
    double ssq;
};

struct ReducedModel {
    double a;           // coupling scalar, 2*sqrt(ssq); in (0, 2]
    Eigen::Matrix2d m2; // [[1-a^2, a], [-a, 1]]
    double theta;       // rotation angle per step, arccos(1 - a^2/2), in (0, pi]
    OverlapData overlaps;
};

/// Smallest admissible coupling scalar a; below it the reduced model is not
/// built (V|gamma> is treated as numerically orthogonal to L).
inline constexpr double kMinCoupling = 1e-9;

OverlapData compute_overlaps(const SearchProblem& problem);

/// Throws OrthogonalStartError when ssq <= (kMinCoupling/2)^2.
ReducedModel build_reduced_model(OverlapData overlaps);

/// The full-space unit vector |mu>. Throws OrthogonalStartError as above.
StateVector mu_state(const SearchProblem& problem,
                     const OverlapData& overlaps);

/// The (l+1) x (l+1) matrix representing U on the invariant subspace
/// spanned by {|gamma>} and the V^-1|w_j>: row 0 is
/// [1-4*ssq, 2*mu_1, ..., 2*mu_l], column 0 below it is -2*conj(mu_j), and
/// the rest is the identity. U's matrix representation in that (ordered,
/// non-orthogonal) basis is the transpose of this matrix.
Matrix big_m_matrix(const OverlapData& overlaps);

/// Coordinates of the iterated state in the non-orthogonal basis
/// {|gamma>, |mu>}. Trajectories from (1, 0) stay real.
struct CoefficientPair {
    double c1;
    double c2;
};

/// One multiplication by transpose(M).
CoefficientPair reduced_step(const ReducedModel& model, CoefficientPair c);

/// transpose(M)^m applied to (1, 0), by repeated multiplication.
CoefficientPair iterate_reduced(const ReducedModel& model, long steps);

/// |c1*a/2 + c2|^2 (see the module comment for the derivation), clamped to
/// [0, 1] when within 1e-9 outside; larger excursions throw
/// NumericalConsistencyError.
double success_probability(const ReducedModel& model, CoefficientPair c);

enum class IterationMode { Paper, Exact };

/// Paper mode: round(pi / (2a)). Exact mode: the m in
/// [0, ceil(pi/theta) + 1] maximizing the closed-form success probability,
/// ties broken toward smaller m.
long optimal_iteration_count(const ReducedModel& model, IterationMode mode);

} // namespace multigrover
