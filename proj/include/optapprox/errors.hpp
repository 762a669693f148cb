#pragma once

#include <stdexcept>
#include <string>

namespace optapprox {

// Bad input or out-of-range parameter. CLI maps these to exit code 2.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Numerical breakdown (singular system, lost definiteness, stagnated
// iteration). CLI maps these to exit code 3.
class NumericError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ZeroConstantTerm : public DomainError {
  public:
    ZeroConstantTerm() : DomainError("series has zero constant term; reciprocal undefined") {}
};

class ZeroFunction : public DomainError {
  public:
    ZeroFunction() : DomainError("f must not be the zero polynomial") {}
};

class UnsupportedAlpha : public DomainError {
  public:
    explicit UnsupportedAlpha(const std::string& what) : DomainError(what) {}
};

class RootInsideDisk : public DomainError {
  public:
    RootInsideDisk() : DomainError("factored input has a root strictly inside the unit disk") {}
};

class InsufficientData : public DomainError {
  public:
    explicit InsufficientData(const std::string& what) : DomainError(what) {}
};

class NotPositiveDefinite : public NumericError {
  public:
    NotPositiveDefinite() : NumericError("matrix is not positive definite to working precision") {}
};

class SingularSystem : public NumericError {
  public:
    SingularSystem() : NumericError("determinant below singularity threshold") {}
};

class ConvergenceFailure : public NumericError {
  public:
    explicit ConvergenceFailure(const std::string& what) : NumericError(what) {}
};

// CLI argument problems. Exit code 1.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace optapprox
