#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multigrover/simulate.hpp"

namespace multigrover {

enum class BoundSense { AtMost, AtLeast };

/// One named residual check: the worst value observed across a family of
/// problems, against its bound.
struct CheckResult {
    std::string name;
    double worst;
    double bound;
    BoundSense sense;
    bool pass;
};

struct FamilyReport {
    std::string family;
    std::vector<CheckResult> checks;
    bool pass;
};

/// 50 deterministic problems: dimension cycles {16, 32, 64, 128, 256},
/// target count cycles 1..8, Haar V, Gaussian-random gamma, sampled targets.
/// All child seeds derive from the given base seed.
std::vector<SearchProblem> validation_family(std::uint64_t seed);

/// Invariance of the (l+1)-dimensional subspace under U, the per-basis-vector
/// step identities behind it, and the perturbed-operator negative control.
FamilyReport run_lemma21_family(std::uint64_t seed);

/// Containment of the iterates U^m gamma in the invariant subspace,
/// m = 0..100.
FamilyReport run_lemma22_family(std::uint64_t seed);

/// Agreement of full-space and reduced success probabilities over a full
/// rotation period.
FamilyReport run_thm23_family(std::uint64_t seed);

/// Dense comparison of the search operator against its directly constructed
/// special cases (classic Grover; single marked state under arbitrary V).
FamilyReport run_degenerate_family(std::uint64_t seed);

std::string format_family_report(const FamilyReport& report);

} // namespace multigrover
