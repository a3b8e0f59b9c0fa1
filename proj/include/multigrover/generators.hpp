#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multigrover/operators.hpp"

namespace multigrover {

/// Source of the unitary V. File payloads use the JSON matrix format and
/// are unitarity-checked on load.
struct UnitarySpec {
    enum class Tag { Identity, WalshHadamard, Haar, File };

    Tag tag = Tag::Identity;
    std::uint64_t seed = 0; // Haar only
    std::string path;       // File only

    static UnitarySpec identity() { return {Tag::Identity, 0, {}}; }
    static UnitarySpec walsh_hadamard() { return {Tag::WalshHadamard, 0, {}}; }
    static UnitarySpec haar(std::uint64_t seed) {
        return {Tag::Haar, seed, {}};
    }
    static UnitarySpec file(std::string path) {
        return {Tag::File, 0, std::move(path)};
    }
};

/// Source of the initial state gamma.
struct StateSpec {
    enum class Tag { Uniform, Basis, Random, File };

    Tag tag = Tag::Uniform;
    Eigen::Index index = 0; // Basis only
    std::uint64_t seed = 0; // Random only
    std::string path;       // File only

    static StateSpec uniform() { return {Tag::Uniform, 0, 0, {}}; }
    static StateSpec basis(Eigen::Index index) {
        return {Tag::Basis, index, 0, {}};
    }
    static StateSpec random(std::uint64_t seed) {
        return {Tag::Random, 0, seed, {}};
    }
    static StateSpec file(std::string path) {
        return {Tag::File, 0, 0, std::move(path)};
    }
};

/// Marked indices, either listed explicitly or sampled without replacement.
struct TargetsSpec {
    enum class Tag { Explicit, Sampled };

    Tag tag = Tag::Explicit;
    std::vector<Eigen::Index> indices; // Explicit only
    Eigen::Index count = 0;            // Sampled only
    std::uint64_t seed = 0;            // Sampled only

    static TargetsSpec explicit_list(std::vector<Eigen::Index> indices) {
        return {Tag::Explicit, std::move(indices), 0, 0};
    }
    static TargetsSpec sampled(Eigen::Index count, std::uint64_t seed) {
        return {Tag::Sampled, {}, count, seed};
    }
};

LinearOperator make_unitary(const UnitarySpec& spec, Eigen::Index n);

StateVector make_state(const StateSpec& spec, Eigen::Index n);

TargetSet make_targets(const TargetsSpec& spec, Eigen::Index n);

/// Haar-uniform dense unitary: i.i.d. complex Gaussian matrix, Householder
/// QR, then column j is multiplied by conj(r_jj)/|r_jj|. Without that phase
/// fix the QR factor is not Haar-distributed.
Matrix haar_unitary(Eigen::Index n, std::uint64_t seed);

SearchProblem make_problem(const TargetsSpec& targets, const StateSpec& gamma,
                           const UnitarySpec& unitary, Eigen::Index n);

} // namespace multigrover
