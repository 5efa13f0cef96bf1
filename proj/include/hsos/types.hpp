#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hsos {

using Complex = std::complex<double>;

/// Hard cap on polynomial degree; keeps every coefficient matrix at most
/// 513 x 513 and all solver runs interactive.
inline constexpr int kMaxDegree = 512;

/// Default relative tolerance for positivity tests and decision bands.
inline constexpr double kDefaultTol = 1e-9;

/// Thrown when an arithmetic result would exceed kMaxDegree.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by recover_q when the block Toeplitz matrix of the input data is
/// not positive semidefinite within tolerance.
class NotPsdError : public std::runtime_error {
 public:
  explicit NotPsdError(const std::string& what, double min_eig)
      : std::runtime_error(what), min_eig_(min_eig) {}
  double min_eig() const { return min_eig_; }

 private:
  double min_eig_;
};

/// Thrown by iterative solvers that exhaust their iteration budget.
class NoConvergenceError : public std::runtime_error {
 public:
  explicit NoConvergenceError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

/// Thrown by the decision pipeline when it reaches a state the underlying
/// equivalence theorem rules out (a bug or a tolerance failure, never a
/// property of the input).
class InconsistentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double x);

}  // namespace hsos
