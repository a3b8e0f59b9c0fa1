#include "multigrover/hilbert.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace multigrover {

StateVector::StateVector(Vector amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2) {
        throw DimensionError("state dimension must be at least 2, got " +
                             std::to_string(amplitudes_.size()));
    }
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > kNormTol) {
        throw InvalidStateError("state norm is " + std::to_string(norm) +
                                ", not 1 within 1e-12");
    }
}

StateVector StateVector::basis(Eigen::Index dim, Eigen::Index index) {
    if (index < 0 || index >= dim) {
        throw DimensionError("basis index " + std::to_string(index) +
                             " out of range for dimension " +
                             std::to_string(dim));
    }
    Vector v = Vector::Zero(dim);
    v[index] = 1.0;
    return StateVector(std::move(v));
}

Complex inner_product(const StateVector& x, const StateVector& y) {
    if (x.dim() != y.dim()) {
        throw DimensionError("inner product of dimensions " +
                             std::to_string(x.dim()) + " and " +
                             std::to_string(y.dim()));
    }
    // Eigen's dot conjugates the left operand.
    return x.amplitudes().dot(y.amplitudes());
}

void fwht_inplace(Vector& x) {
    const Eigen::Index n = x.size();
    if (!is_power_of_two(n)) {
        throw DimensionError("fwht length must be a power of two, got " +
                             std::to_string(n));
    }
    const double scale = 1.0 / std::numbers::sqrt2;
    for (Eigen::Index half = 1; half < n; half <<= 1) {
        for (Eigen::Index block = 0; block < n; block += 2 * half) {
            for (Eigen::Index k = block; k < block + half; ++k) {
                const Complex u = x[k];
                const Complex v = x[k + half];
                x[k] = (u + v) * scale;
                x[k + half] = (u - v) * scale;
            }
        }
    }
}

Vector fwht(Vector x) {
    fwht_inplace(x);
    return x;
}

LinearOperator LinearOperator::identity(Eigen::Index dim) {
    if (dim < 2) {
        throw DimensionError("operator dimension must be at least 2, got " +
                             std::to_string(dim));
    }
    return LinearOperator(Kind::Identity, dim);
}

LinearOperator LinearOperator::walsh_hadamard(Eigen::Index dim) {
    if (dim < 2 || !is_power_of_two(dim)) {
        throw DimensionError(
            "Walsh-Hadamard dimension must be a power of two >= 2, got " +
            std::to_string(dim));
    }
    return LinearOperator(Kind::WalshHadamard, dim);
}

LinearOperator LinearOperator::dense(Matrix matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw DimensionError("dense operator must be square, got " +
                             std::to_string(matrix.rows()) + "x" +
                             std::to_string(matrix.cols()));
    }
    if (matrix.rows() < 2) {
        throw DimensionError("operator dimension must be at least 2, got " +
                             std::to_string(matrix.rows()));
    }
    LinearOperator op(Kind::DenseMatrix, matrix.rows());
    op.matrix_ = std::make_shared<const Matrix>(std::move(matrix));
    return op;
}

LinearOperator LinearOperator::composed(std::vector<LinearOperator> factors) {
    if (factors.empty()) {
        throw DimensionError("composed operator needs at least one factor");
    }
    const Eigen::Index dim = factors.front().dim();
    for (const auto& f : factors) {
        if (f.dim() != dim) {
            throw DimensionError("composed factors have mixed dimensions");
        }
    }
    LinearOperator op(Kind::Composed, dim);
    op.factors_ =
        std::make_shared<const std::vector<LinearOperator>>(std::move(factors));
    return op;
}

const Matrix& LinearOperator::matrix() const {
    if (kind_ != Kind::DenseMatrix) {
        throw Error("matrix() is only available for the DenseMatrix kind");
    }
    return *matrix_;
}

Vector LinearOperator::apply_raw(const Vector& x, bool adjoint) const {
    if (x.size() != dim_) {
        throw DimensionError("operator of dimension " + std::to_string(dim_) +
                             " applied to vector of dimension " +
                             std::to_string(x.size()));
    }
    switch (kind_) {
    case Kind::Identity:
        return x;
    case Kind::WalshHadamard:
        // Self-adjoint, so the adjoint flag is a no-op.
        return fwht(x);
    case Kind::DenseMatrix:
        return adjoint ? Vector(matrix_->adjoint() * x)
                       : Vector(*matrix_ * x);
    case Kind::Composed: {
        Vector y = x;
        if (!adjoint) {
            for (auto it = factors_->rbegin(); it != factors_->rend(); ++it) {
                y = it->apply_raw(y, false);
            }
        } else {
            for (const auto& f : *factors_) {
                y = f.apply_raw(y, true);
            }
        }
        return y;
    }
    }
    throw Error("unreachable operator kind");
}

Matrix LinearOperator::materialize(Eigen::Index dense_limit) const {
    if (kind_ == Kind::DenseMatrix) {
        return *matrix_;
    }
    if (dim_ > dense_limit) {
        throw ResourceLimitError(
            "refusing to materialize a structured operator of dimension " +
            std::to_string(dim_) + " (dense limit " +
            std::to_string(dense_limit) + ")");
    }
    switch (kind_) {
    case Kind::Identity:
        return Matrix::Identity(dim_, dim_);
    case Kind::WalshHadamard: {
        Matrix w(dim_, dim_);
        const double scale = 1.0 / std::sqrt(static_cast<double>(dim_));
        for (Eigen::Index j = 0; j < dim_; ++j) {
            for (Eigen::Index k = 0; k < dim_; ++k) {
                const auto bits = static_cast<std::uint64_t>(j & k);
                w(j, k) = (std::popcount(bits) & 1) ? -scale : scale;
            }
        }
        return w;
    }
    case Kind::Composed: {
        Matrix product = factors_->front().materialize(dense_limit);
        for (std::size_t i = 1; i < factors_->size(); ++i) {
            product = product * (*factors_)[i].materialize(dense_limit);
        }
        return product;
    }
    default:
        throw Error("unreachable operator kind");
    }
}

StateVector apply(const LinearOperator& op, const StateVector& x,
                  bool adjoint) {
    if (op.dim() != x.dim()) {
        throw DimensionError("operator of dimension " +
                             std::to_string(op.dim()) +
                             " applied to state of dimension " +
                             std::to_string(x.dim()));
    }
    return StateVector(op.apply_raw(x.amplitudes(), adjoint));
}

double unitarity_residual(const LinearOperator& op, Eigen::Index dense_limit) {
    if (op.dim() > dense_limit) {
        throw ResourceLimitError(
            "unitarity residual is a dense computation; dimension " +
            std::to_string(op.dim()) + " exceeds the dense limit " +
            std::to_string(dense_limit));
    }
    const Matrix a = op.materialize(dense_limit);
    const Matrix gram = a.adjoint() * a;
    return (gram - Matrix::Identity(op.dim(), op.dim())).cwiseAbs().maxCoeff();
}

} // namespace multigrover
