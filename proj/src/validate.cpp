#include "multigrover/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "multigrover/generators.hpp"
#include "multigrover/rng.hpp"

namespace multigrover {

namespace {

// Salts for the per-problem child seeds of a family base seed.
enum : std::uint64_t {
    kSaltUnitary = 1,
    kSaltGamma = 2,
    kSaltTargets = 3,
    kSaltTrials = 4,
    kSaltControlProbe = 5,
    kSaltControlTrials = 6,
};

CheckResult make_check(std::string name, double worst, double bound,
                       BoundSense sense) {
    const bool pass =
        sense == BoundSense::AtMost ? worst <= bound : worst >= bound;
    return CheckResult{std::move(name), worst, bound, sense, pass};
}

FamilyReport finish_report(std::string family,
                           std::vector<CheckResult> checks) {
    bool pass = true;
    for (const CheckResult& check : checks) {
        pass = pass && check.pass;
    }
    return FamilyReport{std::move(family), std::move(checks), pass};
}

/// Unit vector in the orthogonal complement of the subspace, derived
/// deterministically from the seed.
Vector complement_unit(const SubspaceBasis& basis, std::uint64_t seed) {
    PortableRng rng(seed);
    for (;;) {
        Vector probe(basis.vectors.rows());
        for (Eigen::Index k = 0; k < probe.size(); ++k) {
            probe[k] = rng.normal_complex();
        }
        const Vector coeffs =
            basis.gram.ldlt().solve(basis.vectors.adjoint() * probe);
        Vector rest = probe - basis.vectors * coeffs;
        const double norm = rest.norm();
        if (norm > 1e-6) {
            return rest / norm;
        }
    }
}

} // namespace

std::vector<SearchProblem> validation_family(std::uint64_t seed) {
    constexpr Eigen::Index dims[] = {16, 32, 64, 128, 256};
    std::vector<SearchProblem> problems;
    problems.reserve(50);
    for (std::uint64_t i = 0; i < 50; ++i) {
        const Eigen::Index n = dims[i % 5];
        const auto count = static_cast<Eigen::Index>(i % 8) + 1;
        problems.push_back(make_problem(
            TargetsSpec::sampled(count, derive_seed(seed, i, kSaltTargets)),
            StateSpec::random(derive_seed(seed, i, kSaltGamma)),
            UnitarySpec::haar(derive_seed(seed, i, kSaltUnitary)), n));
    }
    return problems;
}

FamilyReport run_lemma21_family(std::uint64_t seed) {
    const std::vector<SearchProblem> problems = validation_family(seed);
    double worst_invariance = 0.0;
    double worst_marked = 0.0;
    double worst_start = 0.0;
    for (std::uint64_t i = 0; i < problems.size(); ++i) {
        const SearchProblem& problem = problems[i];
        worst_invariance = std::max(
            worst_invariance,
            invariance_residual(problem, 8, derive_seed(seed, i, kSaltTrials)));

        const OverlapData overlaps = compute_overlaps(problem);
        const Vector& gamma = problem.gamma().amplitudes();
        const auto& targets = problem.targets().indices();
        const Eigen::Index n = problem.dim();

        // One marked basis vector at a time: U(V^-1 w_j) must equal
        // V^-1 w_j - 2 conj(mu_j) gamma.
        for (Eigen::Index j = 0; j < problem.targets().count(); ++j) {
            Vector marked = Vector::Zero(n);
            marked[targets[static_cast<std::size_t>(j)]] = 1.0;
            const Vector x = problem.v().apply_raw(marked, true);
            const Vector expected =
                x - 2.0 * std::conj(overlaps.mu[j]) * gamma;
            worst_marked =
                std::max(worst_marked,
                         (search_step_raw(problem, x) - expected).norm());
        }

        // The start vector: U gamma must equal
        // (1 - 4 ssq) gamma + 2 sum_j mu_j V^-1 w_j.
        Vector scatter = Vector::Zero(n);
        for (Eigen::Index j = 0; j < problem.targets().count(); ++j) {
            scatter[targets[static_cast<std::size_t>(j)]] = overlaps.mu[j];
        }
        const Vector expected = (1.0 - 4.0 * overlaps.ssq) * gamma +
                                2.0 * problem.v().apply_raw(scatter, true);
        worst_start = std::max(
            worst_start, (search_step_raw(problem, gamma) - expected).norm());
    }

    // Negative control: U followed by a rotation by 1e-3 radians in a plane
    // spanned by one subspace vector and one complement vector must leak.
    const SearchProblem& control = problems[0];
    const SubspaceBasis basis = build_subspace_basis(control);
    const Vector q = search_step_raw(control, control.gamma().amplitudes());
    const Vector r =
        complement_unit(basis, derive_seed(seed, 0, kSaltControlProbe));
    constexpr double eps = 1e-3;
    const auto perturbed = [&](const Vector& x) {
        Vector y = search_step_raw(control, x);
        const Complex alpha = q.dot(y);
        const Complex beta = r.dot(y);
        y += (std::cos(eps) - 1.0) * (alpha * q + beta * r) +
             std::sin(eps) * (alpha * r - beta * q);
        return y;
    };
    const double control_residual = subspace_leak_residual(
        control, perturbed, 64, derive_seed(seed, 0, kSaltControlTrials));

    return finish_report(
        "lemma21",
        {make_check("subspace-invariance", worst_invariance, 1e-10,
                    BoundSense::AtMost),
         make_check("marked-vector-step-identity", worst_marked, 1e-11,
                    BoundSense::AtMost),
         make_check("start-vector-step-identity", worst_start, 1e-11,
                    BoundSense::AtMost),
         make_check("perturbed-negative-control", control_residual, 5e-4,
                    BoundSense::AtLeast)});
}

FamilyReport run_lemma22_family(std::uint64_t seed) {
    double worst_ratio = 0.0;
    for (const SearchProblem& problem : validation_family(seed)) {
        const SubspaceBasis basis = build_subspace_basis(problem);
        Vector x = problem.gamma().amplitudes();
        for (long m = 0; m <= 100; ++m) {
            // The nominal per-step bound m*1e-11 is zero at m=0; floor it at
            // 1e-12 because the oblique projector itself rounds.
            const double bound =
                std::max(1e-12, static_cast<double>(m) * 1e-11);
            worst_ratio = std::max(worst_ratio, subspace_leak(basis, x) / bound);
            if (m < 100) {
                x = search_step_raw(problem, x);
            }
        }
    }
    return finish_report("lemma22",
                         {make_check("iterate-containment-ratio", worst_ratio,
                                     1.0, BoundSense::AtMost)});
}

FamilyReport run_thm23_family(std::uint64_t seed) {
    double worst = 0.0;
    for (const SearchProblem& problem : validation_family(seed)) {
        const ReducedModel model =
            build_reduced_model(compute_overlaps(problem));
        const long m_max = 2 * static_cast<long>(
                                   std::ceil(std::numbers::pi / model.theta));
        worst = std::max(worst, compare_full_reduced(problem, m_max));
    }
    return finish_report("thm23",
                         {make_check("full-reduced-deviation", worst, 1e-9,
                                     BoundSense::AtMost)});
}

FamilyReport run_degenerate_family(std::uint64_t seed) {
    constexpr Eigen::Index dims[] = {4, 8, 16, 32, 64};
    double worst_classic = 0.0;
    double worst_general = 0.0;
    for (std::uint64_t i = 0; i < 5; ++i) {
        const Eigen::Index n = dims[i];
        const Matrix identity = Matrix::Identity(n, n);

        // Classic chain: V = Identity and uniform gamma reduce U to
        // -(I - 2|s><s|)(I - 2|w><w|).
        const SearchProblem classic = make_problem(
            TargetsSpec::sampled(1, derive_seed(seed, i, kSaltTargets)),
            StateSpec::uniform(), UnitarySpec::identity(), n);
        const Eigen::Index w = classic.targets().indices()[0];
        const Vector& s = classic.gamma().amplitudes();
        Matrix flip = identity;
        flip(w, w) = -1.0;
        const Matrix classic_direct =
            -(identity - 2.0 * s * s.adjoint()) * flip;
        worst_classic =
            std::max(worst_classic, (materialize_search_operator(classic) -
                                     classic_direct)
                                        .cwiseAbs()
                                        .maxCoeff());

        // Single-marked-state chain under an arbitrary V:
        // -(I - 2|gamma><gamma|) V^-1 (I - 2|w><w|) V.
        const SearchProblem general = make_problem(
            TargetsSpec::sampled(1, derive_seed(seed, i, kSaltTargets)),
            StateSpec::random(derive_seed(seed, i, kSaltGamma)),
            UnitarySpec::haar(derive_seed(seed, i, kSaltUnitary)), n);
        const Eigen::Index t = general.targets().indices()[0];
        const Vector& gamma = general.gamma().amplitudes();
        const Matrix v = general.v().materialize();
        Matrix flip_t = identity;
        flip_t(t, t) = -1.0;
        const Matrix general_direct = -(identity -
                                        2.0 * gamma * gamma.adjoint()) *
                                      v.adjoint() * flip_t * v;
        worst_general =
            std::max(worst_general, (materialize_search_operator(general) -
                                     general_direct)
                                        .cwiseAbs()
                                        .maxCoeff());
    }
    return finish_report(
        "degenerate",
        {make_check("classic-grover-chain", worst_classic, 1e-12,
                    BoundSense::AtMost),
         make_check("single-target-general-chain", worst_general, 1e-12,
                    BoundSense::AtMost)});
}

std::string format_family_report(const FamilyReport& report) {
    std::string out =
        "family " + report.family + ": " + (report.pass ? "PASS" : "FAIL") +
        "\n";
    for (const CheckResult& check : report.checks) {
        char line[160];
        std::snprintf(line, sizeof(line),
                      "  %-32s worst %.6e  (limit %s %g)  %s\n",
                      check.name.c_str(), check.worst,
                      check.sense == BoundSense::AtMost ? "<=" : ">=",
                      check.bound, check.pass ? "pass" : "FAIL");
        out += line;
    }
    return out;
}

} // namespace multigrover
