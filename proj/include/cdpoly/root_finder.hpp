#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdpoly/complex_roots.hpp"
#include "cdpoly/polynomial.hpp"

namespace cdpoly {

struct CandidateClass {
  QuadraticClass<double> cls;
  int multiplicity;  // multiplicity of the conjugate root pair in the input
};

struct RealCandidate {
  double value;
  int multiplicity;
};

struct Candidates {
  std::vector<CandidateClass> classes;
  std::vector<RealCandidate> real_roots;
};

/// Pairs the complex roots of a real polynomial into (T, N) = (2 Re z, |z|^2)
/// for every non-real pair, and lists the real roots separately.  Classes
/// closer than tol (relative) are merged.
Candidates candidate_classes(std::span<const double> coeffs, const SolverOptions& options = {});

template <Scalar S>
Candidates candidate_classes(const CentralPolynomial<S>& p, const SolverOptions& options = {}) {
  const std::vector<double> c = to_double(p);
  return candidate_classes(std::span<const double>(c), options);
}

template <Scalar S>
struct SphericalTest {
  bool spherical = false;
  int multiplicity = 0;
  /// f divided by (x^2 - T x + N)^multiplicity.
  Polynomial<S> quotient;
};

/// Divides f by x^2 - T x + N as long as the remainder a x + b vanishes
/// (exactly, or within tol * (1 + coefficient scale) for floats).  The class
/// must not contain scalars; the caller is responsible for that.
template <Scalar S>
SphericalTest<S> is_spherical_root(const Polynomial<S>& f, const QuadraticClass<S>& q, double tol = kDefaultTol);

template <Scalar S>
struct SphericalClass {
  QuadraticClass<S> cls;
  int multiplicity;
};

template <Scalar S>
struct SphericalReport {
  std::vector<SphericalClass<S>> classes;
  std::vector<S> central_roots;
  /// f with every accepted class divided out:
  ///   f = deflated * prod (x^2 - T x + N)^multiplicity.
  Polynomial<S> deflated;
};

template <Scalar S>
struct SphericalOptions {
  double tol = kDefaultTol;
  /// Denominator bound for rationalizing numeric (T, N) in exact mode.
  std::int64_t max_denominator = 1'000'000;
  /// Exact (T, N) pairs to test instead of numeric discovery.
  std::optional<std::vector<QuadraticClass<S>>> candidates;
  /// Scalars to test as central roots in addition to the discovered ones.
  std::vector<S> central_candidates;
  SolverOptions solver;
};

/// Companion roots -> candidate classes -> division test -> deflation.
/// Classes are processed in increasing |N|, then |T|.
template <Scalar S>
SphericalReport<S> spherical_classes(const Polynomial<S>& f, const SphericalOptions<S>& options = {});

/// Filters candidate scalars r by f(r) = 0.
template <Scalar S>
std::vector<S> central_roots(const Polynomial<S>& f, const std::vector<S>& candidates, double tol = kDefaultTol);

template <Scalar S>
struct SphericalFactorization {
  /// The part of f carrying only non-spherical roots.
  Polynomial<S> remainder;
  std::vector<SphericalClass<S>> classes;
};

/// f = remainder * prod p_class^multiplicity over a division algebra (C, H,
/// O).  Throws NotDivisionAlgebra elsewhere.  When deg f = 2k and k distinct
/// classes are found the remainder is a constant.
template <Scalar S>
SphericalFactorization<S> spherical_factorization(const Polynomial<S>& f, const SphericalOptions<S>& options = {});

enum class ClassRootKind { None, Spherical, Isolated };

template <Scalar S>
struct ClassRoots {
  ClassRootKind kind = ClassRootKind::None;
  /// The unique root in the class when kind == Isolated.
  std::optional<Element<S>> root;
};

/// Roots of f inside the class of (T, N), for alternative algebras
/// (level <= 3).  With f = g p + a x + b, every r in the class gives
/// f(r) = a r + b, so either the class is spherical, or r = -a^{-1} b is the
/// only candidate.  Throws NotDivisionAlgebra at level >= 4.
template <Scalar S>
ClassRoots<S> roots_in_class(const Polynomial<S>& f, const QuadraticClass<S>& q, double tol = kDefaultTol);

template <Scalar S>
struct RootCatalog {
  std::vector<SphericalClass<S>> spherical;
  std::vector<Element<S>> isolated;
  std::vector<S> central;
};

/// Every root of f over C, H or O: each class of C_f is either spherical,
/// holds one isolated root, or (numerically) none.
template <Scalar S>
RootCatalog<S> find_roots(const Polynomial<S>& f, const SphericalOptions<S>& options = {});

}  // namespace cdpoly
