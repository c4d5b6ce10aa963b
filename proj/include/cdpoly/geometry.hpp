#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdpoly/complex_roots.hpp"
#include "cdpoly/hull.hpp"
#include "cdpoly/root_finder.hpp"

namespace cdpoly {

/// A unit imaginary direction I (trace 0, norm 1).  The slice C_I is the
/// plane spanned by 1 and I, with x + yI read as the complex number x + iy.
class SliceDirection {
 public:
  /// Throws InvalidArgument unless trace(I) = 0 and norm(I) = 1 within tol,
  /// and NotLocallyComplex outside the main sequence.
  explicit SliceDirection(Element<double> I, double tol = kDefaultTol);

  /// im(a) / |im(a)|, or e1 when a is (numerically) scalar.
  static SliceDirection through(const Element<double>& a, double tol = kDefaultTol);

  const Element<double>& unit() const noexcept { return I_; }

  /// (<a,1>, <a,I>).
  Complex project(const Element<double>& a) const;
  /// x + yI.
  Element<double> lift(Complex z) const;

 private:
  Element<double> I_;
};

struct SliceProjection {
  std::vector<Complex> coeffs;     // f_I, increasing degree, trailing zeros trimmed
  std::vector<double> perp_norms;  // |a_k - pi_I(a_k)|
};

SliceProjection slice_project(const Polynomial<double>& f, const SliceDirection& I);

struct SnailSlice {
  SliceDirection direction;
  std::vector<Complex> projected;
  std::vector<Complex> roots;
  std::vector<Complex> hull;
  /// f_I is constant, so K(f_I) is the whole plane.
  bool whole_plane = false;
};

SnailSlice make_slice(const Polynomial<double>& f, const SliceDirection& I, const SolverOptions& solver = {});

struct SnailMembership {
  HullVerdict verdict;
  Complex point;  // lambda in slice coordinates
  SnailSlice witness;
};

/// Membership of lambda in the snail, decided in the slice through lambda.
/// Degenerate hulls use their relative interior.
SnailMembership in_snail(const Polynomial<double>& f, const Element<double>& lambda, double tol = kDefaultTol);

/// 256 slices at level 2, halved for every further level (at least 8);
/// two slices (+e1, -e1) at level 1.
int default_slice_count(int level);

/// Unit imaginary directions from a Halton sequence with a seeded random
/// shift, pushed through the inverse normal CDF and normalized.
std::vector<SliceDirection> sample_directions(const Params<double>& params, int count, std::uint64_t seed);

/// count <= 0 picks default_slice_count.
std::vector<SnailSlice> snail_sample(const Polynomial<double>& f, int count = 0, std::uint64_t seed = 0);

struct Bounds {
  bool monic;
  /// R1 and R2 are strict bounds, R3 is attained.  For non-monic input these
  /// are the versions normalized by |a_n|.
  double r1;
  double r2;
  double r3;
};

/// Throws DegreeZero for constants and NonMonicHighLevel for non-monic input
/// beyond the octonions.
Bounds bounds(const Polynomial<double>& f, double tol = kDefaultTol);

struct RhoEstimate {
  double rho;
  /// Set beyond the octonions, where only spherical and central roots count.
  bool partial;
};

RhoEstimate rho_estimate(const Polynomial<double>& f, double tol = kDefaultTol);

struct CriticalClassVerdict {
  QuadraticClass<double> cls;
  Complex point;
  HullVerdict verdict;
};

struct GaussLucasReport {
  std::vector<Complex> companion_roots;
  std::vector<Complex> hull;
  std::vector<CriticalClassVerdict> classes;
  bool pass = true;
};

/// Every spherical class of f' placed at T/2 + sqrt(N - T^2/4) i and tested
/// against the hull of the complex roots of C_f.
GaussLucasReport gauss_lucas_spherical_check(const Polynomial<double>& f, double tol = kDefaultTol);

struct QuadraticCriticalReport {
  Element<double> critical_point;  // -(2 a_2)^{-1} a_1
  HullVerdict verdict;
};

/// Degree 2 over C, H or O: the single critical point against the companion
/// root hull in its own slice.
QuadraticCriticalReport gauss_lucas_quadratic_check(const Polynomial<double>& f, double tol = kDefaultTol);

/// Places any element in its slice and tests it against the companion root
/// hull.  Works at every level; past the octonions the point may land outside.
HullVerdict companion_hull_membership(const Polynomial<double>& f, const Element<double>& lambda,
                                      double tol = kDefaultTol);

struct JensenSphere {
  double center;
  double radius;
};

/// One sphere per non-real conjugate root pair of g.
std::vector<JensenSphere> jensen_spheres(const CentralPolynomial<double>& g, const SolverOptions& solver = {});

struct JensenClassVerdict {
  QuadraticClass<double> cls;
  std::optional<std::size_t> sphere;  // first sphere containing the class
};

struct JensenReport {
  std::vector<JensenSphere> spheres;
  std::vector<JensenClassVerdict> classes;
  bool pass = true;
};

/// (T/2 - c)^2 + (N - T^2/4) <= r^2, up to tol * (1 + r^2).
bool class_in_sphere(const QuadraticClass<double>& q, const JensenSphere& s, double tol = kDefaultTol);

/// Real coefficients only (NonRealCoefficients otherwise): spherical classes
/// of f' against the Jensen spheres of f.
JensenReport jensen_check(const Polynomial<double>& f, double tol = kDefaultTol);

/// Any f: spherical classes of f' against the Jensen spheres of C_f.
JensenReport jensen_check_companion(const Polynomial<double>& f, double tol = kDefaultTol);

template <Scalar S>
Polynomial<double> as_double(const Polynomial<S>& f) {
  if constexpr (is_exact_v<S>) {
    return to_double(f, to_double(f.params()));
  } else {
    return f;
  }
}

}  // namespace cdpoly
