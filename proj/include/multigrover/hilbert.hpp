#pragma once

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "multigrover/errors.hpp"

namespace multigrover {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
// Dense operators are stored row-major.
using Matrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Unit-norm tolerance for states, enforced at construction and therefore
/// after every operator application.
inline constexpr double kNormTol = 1e-12;

/// Largest dimension for which an operator may be materialized densely.
inline constexpr Eigen::Index kDenseLimit = 4096;

/// Unit-norm complex amplitude vector of dimension >= 2. Immutable.
class StateVector {
  public:
    /// Takes ownership of the amplitudes; rejects dim < 2 and non-unit norm.
    explicit StateVector(Vector amplitudes);

    static StateVector basis(Eigen::Index dim, Eigen::Index index);

    Eigen::Index dim() const { return amplitudes_.size(); }
    const Vector& amplitudes() const { return amplitudes_; }
    Complex operator[](Eigen::Index k) const { return amplitudes_[k]; }

  private:
    Vector amplitudes_;
};

/// <x|y>: conjugate-linear in the first argument.
Complex inner_product(const StateVector& x, const StateVector& y);

/// Normalized fast Walsh-Hadamard transform, 1/sqrt(2) per butterfly stage;
/// self-inverse. Length must be a power of two.
void fwht_inplace(Vector& x);
Vector fwht(Vector x);

/// Unitary operator on C^N. Structured kinds (Identity, WalshHadamard) apply
/// in O(N) / O(N log N) and are only materialized when a dense computation
/// explicitly asks for it. Immutable; copies share storage.
class LinearOperator {
  public:
    enum class Kind { Identity, WalshHadamard, DenseMatrix, Composed };

    static LinearOperator identity(Eigen::Index dim);
    static LinearOperator walsh_hadamard(Eigen::Index dim);
    static LinearOperator dense(Matrix matrix);
    /// Product of the factors in list order: composed({A,B}) applies B first.
    static LinearOperator composed(std::vector<LinearOperator> factors);

    Kind kind() const { return kind_; }
    Eigen::Index dim() const { return dim_; }

    /// op*x, or adjoint(op)*x. No norm check; callers that need the checked
    /// path go through apply().
    Vector apply_raw(const Vector& x, bool adjoint = false) const;

    /// Dense N x N form. Structured and composed kinds are built on demand
    /// for dim <= dense_limit and rejected above it.
    Matrix materialize(Eigen::Index dense_limit = kDenseLimit) const;

    /// Stored matrix; DenseMatrix kind only.
    const Matrix& matrix() const;

  private:
    LinearOperator(Kind kind, Eigen::Index dim) : kind_(kind), dim_(dim) {}

    Kind kind_;
    Eigen::Index dim_;
    std::shared_ptr<const Matrix> matrix_;
    std::shared_ptr<const std::vector<LinearOperator>> factors_;
};

/// op*x (or adjoint(op)*x). Norm preservation is enforced by the returned
/// StateVector's constructor.
StateVector apply(const LinearOperator& op, const StateVector& x,
                  bool adjoint = false);

/// max |(adjoint(op)*op - I)_jk|, computed densely.
double unitarity_residual(const LinearOperator& op,
                          Eigen::Index dense_limit = kDenseLimit);

inline bool is_power_of_two(Eigen::Index n) {
    return n > 0 && (n & (n - 1)) == 0;
}

} // namespace multigrover
