#include "multigrover/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/QR>

#include "multigrover/io.hpp"
#include "multigrover/rng.hpp"

namespace multigrover {

namespace {

void require_dim(Eigen::Index n) {
    if (n < 2) {
        throw DimensionError("dimension must be at least 2, got " +
                             std::to_string(n));
    }
}

} // namespace

Matrix haar_unitary(Eigen::Index n, std::uint64_t seed) {
    PortableRng rng(seed);
    Matrix ginibre(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            ginibre(r, c) = rng.normal_complex();
        }
    }
    const Eigen::HouseholderQR<Matrix> qr(ginibre);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        const Complex r_cc = qr.matrixQR()(c, c);
        const double magnitude = std::abs(r_cc);
        if (magnitude > 0.0) {
            q.col(c) *= std::conj(r_cc) / magnitude;
        }
    }
    return q;
}

LinearOperator make_unitary(const UnitarySpec& spec, Eigen::Index n) {
    require_dim(n);
    switch (spec.tag) {
    case UnitarySpec::Tag::Identity:
        return LinearOperator::identity(n);
    case UnitarySpec::Tag::WalshHadamard:
        return LinearOperator::walsh_hadamard(n);
    case UnitarySpec::Tag::Haar:
        return LinearOperator::dense(haar_unitary(n, spec.seed));
    default: {
        Matrix loaded = load_unitary(spec.path);
        if (loaded.rows() != n) {
            throw DimensionError(spec.path + ": matrix dimension " +
                                 std::to_string(loaded.rows()) +
                                 " does not match n=" + std::to_string(n));
        }
        return LinearOperator::dense(std::move(loaded));
    }
    }
}

StateVector make_state(const StateSpec& spec, Eigen::Index n) {
    require_dim(n);
    switch (spec.tag) {
    case StateSpec::Tag::Uniform:
        return StateVector(Vector::Constant(
            n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0)));
    case StateSpec::Tag::Basis:
        return StateVector::basis(n, spec.index);
    case StateSpec::Tag::Random: {
        PortableRng rng(spec.seed);
        Vector amplitudes(n);
        for (Eigen::Index k = 0; k < n; ++k) {
            amplitudes[k] = rng.normal_complex();
        }
        amplitudes /= amplitudes.norm();
        return StateVector(std::move(amplitudes));
    }
    default: {
        StateVector loaded = load_state(spec.path);
        if (loaded.dim() != n) {
            throw DimensionError(spec.path + ": state dimension " +
                                 std::to_string(loaded.dim()) +
                                 " does not match n=" + std::to_string(n));
        }
        return loaded;
    }
    }
}

TargetSet make_targets(const TargetsSpec& spec, Eigen::Index n) {
    require_dim(n);
    if (spec.tag == TargetsSpec::Tag::Explicit) {
        return TargetSet(n, spec.indices);
    }
    if (spec.count < 1 || spec.count > n) {
        throw InvalidTargetError("sampled target count must be in [1, " +
                                 std::to_string(n) + "], got " +
                                 std::to_string(spec.count));
    }
    // Floyd's algorithm: uniform over count-subsets, O(count) memory.
    PortableRng rng(spec.seed);
    std::set<Eigen::Index> chosen;
    for (Eigen::Index j = n - spec.count; j < n; ++j) {
        const auto draw = static_cast<Eigen::Index>(
            rng.uniform_below(static_cast<std::uint64_t>(j) + 1));
        chosen.insert(chosen.count(draw) ? j : draw);
    }
    return TargetSet(n, std::vector<Eigen::Index>(chosen.begin(), chosen.end()));
}

SearchProblem make_problem(const TargetsSpec& targets, const StateSpec& gamma,
                           const UnitarySpec& unitary, Eigen::Index n) {
    return SearchProblem(make_targets(targets, n), make_state(gamma, n),
                         make_unitary(unitary, n));
}

} // namespace multigrover
