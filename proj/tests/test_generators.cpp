#include <cmath>
#include <filesystem>
#include <string>
#include <utility>

#include <doctest.h>
#include <json.hpp>

#include "multigrover/generators.hpp"
#include "multigrover/io.hpp"

using namespace multigrover;

namespace {

/// Scratch file path under the system temp directory, removed on destruction.
struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const char* name)
        : path(std::filesystem::temp_directory_path() / name) {}
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("unitary factory covers every source") {
    CHECK(unitarity_residual(make_unitary(UnitarySpec::identity(), 8)) == 0.0);
    CHECK(unitarity_residual(make_unitary(UnitarySpec::walsh_hadamard(), 8)) <=
          1e-14);
    CHECK_THROWS_AS(make_unitary(UnitarySpec::walsh_hadamard(), 6),
                    DimensionError);

    const LinearOperator u1 = make_unitary(UnitarySpec::haar(42), 16);
    const LinearOperator u2 = make_unitary(UnitarySpec::haar(42), 16);
    CHECK(u1.matrix() == u2.matrix());
    CHECK(unitarity_residual(make_unitary(UnitarySpec::haar(42), 64)) <= 1e-11);
}

TEST_CASE("haar matrices satisfy the direct gram identity") {
    const Matrix u = haar_unitary(64, 42);
    const Matrix gram = u.adjoint() * u;
    CHECK((gram - Matrix::Identity(64, 64)).cwiseAbs().maxCoeff() <= 1e-11);
    // Distinct seeds give distinct matrices.
    CHECK((haar_unitary(8, 1) - haar_unitary(8, 2)).cwiseAbs().maxCoeff() >
          1e-3);
}

TEST_CASE("haar first entry has the uniform-measure second moment") {
    // E|U_00|^2 = 1/N for Haar measure; N=2 gives 0.5. Loose Monte Carlo
    // check, reported as a warning so sampling noise cannot break the build.
    double total = 0.0;
    const int trials = 10000;
    for (int s = 0; s < trials; ++s) {
        total += std::norm(haar_unitary(2, static_cast<std::uint64_t>(s))(0, 0));
    }
    const double mean = total / trials;
    WARN(std::abs(mean - 0.5) < 0.02);
}

TEST_CASE("unitary files round-trip and reject corruption") {
    TempFile good("multigrover_test_unitary.json");
    const Matrix u = haar_unitary(8, 17);
    save_unitary(good.path.string(), u);
    const LinearOperator loaded =
        make_unitary(UnitarySpec::file(good.path.string()), 8);
    CHECK((loaded.matrix() - u).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK_THROWS_AS(make_unitary(UnitarySpec::file(good.path.string()), 16),
                    DimensionError);

    TempFile bad("multigrover_test_unitary_bad.json");
    Matrix scaled = u;
    scaled.col(3) *= 1.01;
    save_unitary(bad.path.string(), scaled);
    CHECK_THROWS_AS(make_unitary(UnitarySpec::file(bad.path.string()), 8),
                    InvalidUnitaryError);
}

TEST_CASE("state factory covers every source") {
    const StateVector uniform = make_state(StateSpec::uniform(), 4);
    for (Eigen::Index k = 0; k < 4; ++k) {
        CHECK(uniform[k] == Complex(0.5));
    }

    const StateVector basis = make_state(StateSpec::basis(2), 4);
    CHECK(basis[2] == Complex(1.0));
    CHECK_THROWS_AS(make_state(StateSpec::basis(4), 4), DimensionError);

    const StateVector r1 = make_state(StateSpec::random(9), 32);
    const StateVector r2 = make_state(StateSpec::random(9), 32);
    CHECK(r1.amplitudes() == r2.amplitudes());
    CHECK(std::abs(r1.amplitudes().norm() - 1.0) <= 1e-12);
    CHECK((r1.amplitudes() - make_state(StateSpec::random(10), 32).amplitudes())
              .cwiseAbs()
              .maxCoeff() > 1e-3);
}

TEST_CASE("state files renormalize small drift and reject large drift") {
    const StateVector original = make_state(StateSpec::random(3), 8);
    const auto write_scaled = [&](const std::string& path, double scale) {
        nlohmann::json doc;
        doc["dim"] = 8;
        auto data = nlohmann::json::array();
        for (Eigen::Index k = 0; k < 8; ++k) {
            const Complex amp = original[k] * scale;
            data.push_back({amp.real(), amp.imag()});
        }
        doc["data"] = std::move(data);
        write_text_file(path, doc.dump());
    };

    TempFile close_enough("multigrover_test_state_ok.json");
    write_scaled(close_enough.path.string(), 1.0 + 1e-11);
    const StateVector reloaded =
        make_state(StateSpec::file(close_enough.path.string()), 8);
    CHECK(std::abs(reloaded.amplitudes().norm() - 1.0) <= 1e-12);
    CHECK((reloaded.amplitudes() - original.amplitudes()).cwiseAbs().maxCoeff() <=
          1e-10);

    TempFile drifted("multigrover_test_state_bad.json");
    write_scaled(drifted.path.string(), 1.0 + 1e-8);
    CHECK_THROWS_AS(make_state(StateSpec::file(drifted.path.string()), 8),
                    InvalidStateError);

    TempFile wrong_dim("multigrover_test_state_dim.json");
    save_state(wrong_dim.path.string(), original);
    CHECK_THROWS_AS(make_state(StateSpec::file(wrong_dim.path.string()), 16),
                    DimensionError);
}

TEST_CASE("target factory sorts, samples, and validates") {
    const TargetSet listed = make_targets(TargetsSpec::explicit_list({3, 1}), 8);
    CHECK(listed.indices() == std::vector<Eigen::Index>{1, 3});
    CHECK_THROWS_AS(make_targets(TargetsSpec::explicit_list({1, 1}), 8),
                    InvalidTargetError);

    const TargetSet s1 = make_targets(TargetsSpec::sampled(4, 7), 64);
    const TargetSet s2 = make_targets(TargetsSpec::sampled(4, 7), 64);
    CHECK(s1.indices() == s2.indices());
    CHECK(s1.count() == 4);
    for (const Eigen::Index t : s1.indices()) {
        CHECK(t >= 0);
        CHECK(t < 64);
    }

    const TargetSet all = make_targets(TargetsSpec::sampled(8, 1), 8);
    CHECK(all.count() == 8);
    CHECK(all.indices() == std::vector<Eigen::Index>{0, 1, 2, 3, 4, 5, 6, 7});

    CHECK_THROWS_AS(make_targets(TargetsSpec::sampled(0, 1), 8),
                    InvalidTargetError);
    CHECK_THROWS_AS(make_targets(TargetsSpec::sampled(9, 1), 8),
                    InvalidTargetError);
}

TEST_CASE("assembled problems wire the parts together") {
    const SearchProblem problem =
        make_problem(TargetsSpec::explicit_list({0}), StateSpec::uniform(),
                     UnitarySpec::walsh_hadamard(), 16);
    CHECK(problem.dim() == 16);
    CHECK(problem.targets().count() == 1);
    // Uniform start overlaps every basis vector equally.
    for (Eigen::Index k = 0; k < 16; ++k) {
        CHECK(std::abs(problem.gamma()[k] - Complex(0.25)) < 1e-15);
    }
}
