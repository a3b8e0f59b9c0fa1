#pragma once

#include <stdexcept>
#include <string>

namespace multigrover {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Mismatched or unsupported vector/operator dimensions.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A dense computation was requested above the configured dense limit.
class ResourceLimitError : public Error {
  public:
    using Error::Error;
};

/// V|gamma> is numerically orthogonal to the target subspace; the reduced
/// model's coupling scalar a would vanish and the search cannot progress.
class OrthogonalStartError : public Error {
  public:
    using Error::Error;
};

/// A quantity left its mathematically guaranteed range by more than the
/// tolerance (a bug or a badly conditioned input, never expected in use).
class NumericalConsistencyError : public Error {
  public:
    using Error::Error;
};

/// A matrix failed the unitarity check on load.
class InvalidUnitaryError : public Error {
  public:
    using Error::Error;
};

/// A state vector failed the unit-norm check.
class InvalidStateError : public Error {
  public:
    using Error::Error;
};

/// Target indices are empty, duplicated, or out of range.
class InvalidTargetError : public Error {
  public:
    using Error::Error;
};

/// The Gram matrix of the invariant-subspace basis is numerically singular.
class DegenerateSubspaceError : public Error {
  public:
    using Error::Error;
};

enum class PrecheckVerdict { Proceed, AlreadySolved, OrthogonalStart };

inline const char* to_string(PrecheckVerdict v) {
    switch (v) {
    case PrecheckVerdict::Proceed:
        return "Proceed";
    case PrecheckVerdict::AlreadySolved:
        return "AlreadySolved";
    default:
        return "OrthogonalStart";
    }
}

/// An iteration run was requested on a problem whose precheck is not Proceed.
class PrecheckError : public Error {
  public:
    explicit PrecheckError(PrecheckVerdict verdict)
        : Error(std::string("precheck verdict is ") + to_string(verdict)),
          verdict_(verdict) {}

    PrecheckVerdict verdict() const { return verdict_; }

  private:
    PrecheckVerdict verdict_;
};

} // namespace multigrover
