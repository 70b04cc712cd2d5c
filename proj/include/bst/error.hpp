#pragma once

#include <stdexcept>
#include <string>

namespace bst {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A request that is well-formed but beyond the supported limits
/// (graph order, tree order, enumeration order).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The power iteration hit its iteration cap before the residual dropped
/// below tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_residual, long iterations)
      : Error(what), best_residual_(best_residual), iterations_(iterations) {}

  double best_residual() const noexcept { return best_residual_; }
  long iterations() const noexcept { return iterations_; }

 private:
  double best_residual_;
  long iterations_;
};

}  // namespace bst
