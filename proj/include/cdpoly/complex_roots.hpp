#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "cdpoly/error.hpp"
#include "cdpoly/polynomial.hpp"

namespace cdpoly {

using Complex = std::complex<double>;

struct SolverOptions {
  /// Drives the cluster radius tol^(1/m) for a multiplicity guess m.
  double tol = kDefaultTol;
  /// Upper bound on the relative cluster radius.
  double cluster_cap = 1e-2;
  /// Accepted backward residual |p(z)| / sum |c_k| |z|^k after the iteration.
  double residual_tol = 1e-8;
  int max_iterations = 2000;
};

struct ComplexRoot {
  Complex value;
  std::size_t cluster;  // index into ComplexRootSet::clusters
  double residual;      // |p(value)|
};

/// A group of numerically coincident roots, reported as one point with a
/// multiplicity.  The center is polished with Newton on p^(m-1).
struct RootCluster {
  Complex center;
  int multiplicity;
  double radius;  // merge radius that was used
};

struct ComplexRootSet {
  std::vector<ComplexRoot> roots;
  std::vector<RootCluster> clusters;
  int iterations = 0;
  double max_residual = 0;           // max |p(z)| over roots
  double max_relative_residual = 0;  // max |p(z)| / sum |c_k| |z|^k
  bool converged = false;
};

/// Thrown when the iteration stalls; carries the last iterate.
class NoConvergence : public Error {
 public:
  NoConvergence(int iterations, ComplexRootSet partial)
      : Error(ErrorCode::NoConvergence, "root iteration did not converge after " + std::to_string(iterations) + " steps"),
        partial_(std::move(partial)) {}
  const ComplexRootSet& partial() const noexcept { return partial_; }

 private:
  ComplexRootSet partial_;
};

/// Unique positive root of |c_n| x^n - sum_{k<n} |c_k| x^k; every root of
/// the polynomial lies in the closed disk of that radius.
double cauchy_bound(std::span<const Complex> coeffs);

/// All deg p roots with multiplicity, by simultaneous Aberth-Ehrlich
/// iteration started on the Cauchy circle.  Coefficients are in increasing
/// degree order and the leading one must be nonzero.  Throws DegreeZero for
/// constants and NoConvergence on stalls.
ComplexRootSet complex_roots(std::span<const Complex> coeffs, const SolverOptions& options = {});
ComplexRootSet complex_roots(std::span<const double> coeffs, const SolverOptions& options = {});

template <Scalar S>
ComplexRootSet complex_roots(const CentralPolynomial<S>& p, const SolverOptions& options = {}) {
  const std::vector<double> c = to_double(p);
  return complex_roots(std::span<const double>(c), options);
}

/// Horner evaluation of a complex-coefficient polynomial.
Complex horner(std::span<const Complex> coeffs, Complex z);

}  // namespace cdpoly
