#include "cdpoly/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <boost/math/special_functions/erf.hpp>

namespace cdpoly {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_locally_complex(const Params<double>& p) {
  if (!p.is_locally_complex() || p.level() < 1)
    throw Error(ErrorCode::NotLocallyComplex, "slices need a main-sequence algebra of level >= 1");
}

std::vector<Complex> cluster_centers(const ComplexRootSet& set) {
  std::vector<Complex> out;
  out.reserve(set.clusters.size());
  for (const auto& c : set.clusters) out.push_back(c.center);
  return out;
}

std::vector<Complex> companion_roots(const Polynomial<double>& f, double tol) {
  const CentralPolynomial<double> cf = companion(f, tol);
  if (cf.degree() < 1) return {};
  return cluster_centers(complex_roots(cf));
}

/// Spherical classes of f', or none when f' has degree below 2.
std::vector<SphericalClass<double>> critical_classes(const Polynomial<double>& f, double tol) {
  const Polynomial<double> df = derivative(f);
  if (df.degree() < 2) return {};
  SphericalOptions<double> opts;
  opts.tol = tol;
  return spherical_classes(df, opts).classes;
}

Complex class_point(const QuadraticClass<double>& q) {
  return {q.trace / 2, std::sqrt(std::max(0.0, q.norm - q.trace * q.trace / 4))};
}

std::vector<int> first_primes(std::size_t count) {
  std::vector<int> primes;
  for (int n = 2; primes.size() < count; ++n) {
    bool prime = true;
    for (int p : primes) {
      if (p * p > n) break;
      if (n % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(n);
  }
  return primes;
}

double radical_inverse(std::uint64_t i, int base) {
  double result = 0, f = 1.0 / base;
  while (i > 0) {
    result += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
    i /= static_cast<std::uint64_t>(base);
    f /= base;
  }
  return result;
}

}  // namespace

SliceDirection::SliceDirection(Element<double> I, double tol) : I_(std::move(I)) {
  require_locally_complex(I_.params());
  if (std::fabs(trace(I_)) > tol || std::fabs(norm(I_) - 1.0) > tol)
    throw Error(ErrorCode::InvalidArgument, "slice direction must have trace 0 and norm 1");
}

SliceDirection SliceDirection::through(const Element<double>& a, double tol) {
  require_locally_complex(a.params());
  Element<double> v = im(a);
  const double len = std::sqrt(norm(v));
  if (len <= tol * (1.0 + abs(a))) return SliceDirection(Element<double>::basis(a.params_ptr(), 1), tol);
  v *= 1.0 / len;
  return SliceDirection(std::move(v), tol);
}

Complex SliceDirection::project(const Element<double>& a) const {
  return {a[0], inner_product(a, I_)};
}

Element<double> SliceDirection::lift(Complex z) const {
  Element<double> out = I_ * z.imag();
  out[0] += z.real();
  return out;
}

SliceProjection slice_project(const Polynomial<double>& f, const SliceDirection& I) {
  require_locally_complex(f.params());
  SliceProjection out;
  for (const auto& a : f.coeffs()) {
    const Complex c = I.project(a);
    out.coeffs.push_back(c);
    out.perp_norms.push_back(std::sqrt(std::max(0.0, norm(a - I.lift(c)))));
  }
  const double floor = 64 * kEps * (1.0 + coefficient_scale(f));
  while (!out.coeffs.empty() && std::abs(out.coeffs.back()) <= floor) out.coeffs.pop_back();
  return out;
}

SnailSlice make_slice(const Polynomial<double>& f, const SliceDirection& I, const SolverOptions& solver) {
  SnailSlice s{I, slice_project(f, I).coeffs, {}, {}, false};
  if (s.projected.size() <= 1) {
    s.whole_plane = true;
    return s;
  }
  s.roots = cluster_centers(complex_roots(std::span<const Complex>(s.projected), solver));
  s.hull = convex_hull_2d(s.roots);
  return s;
}

SnailMembership in_snail(const Polynomial<double>& f, const Element<double>& lambda, double tol) {
  require_locally_complex(f.params());
  require_same_params(f.params(), lambda.params());
  const SliceDirection I = SliceDirection::through(lambda, tol);
  const Complex z = I.project(lambda);
  SnailSlice slice = make_slice(f, I);
  const HullVerdict v =
      slice.whole_plane ? HullVerdict::Inside : point_in_hull(z, slice.hull, tol, HullTopology::Relative);
  return {v, z, std::move(slice)};
}

int default_slice_count(int level) {
  if (level <= 1) return 2;
  return std::max(8, 256 >> std::min(level - 2, 16));
}

std::vector<SliceDirection> sample_directions(const Params<double>& params, int count, std::uint64_t seed) {
  if (!params.is_locally_complex() || params.level() < 1)
    throw Error(ErrorCode::NotLocallyComplex, "slices need a main-sequence algebra of level >= 1");
  auto p = main_sequence<double>(params.level());
  std::vector<SliceDirection> out;
  if (params.level() == 1) {
    for (int k = 0; k < std::min(count, 2); ++k)
      out.emplace_back(Element<double>::basis(p, 1, k == 0 ? 1.0 : -1.0));
    return out;
  }
  const std::size_t d = p->dim() - 1;
  const std::vector<int> primes = first_primes(d);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> shift(d);
  for (auto& s : shift) s = unit(rng);

  for (std::uint64_t i = 1; static_cast<int>(out.size()) < count; ++i) {
    std::vector<double> v(p->dim(), 0.0);
    double len2 = 0;
    for (std::size_t j = 0; j < d; ++j) {
      double u = radical_inverse(i, primes[j]) + shift[j];
      u -= std::floor(u);
      u = std::clamp(u, 1e-12, 1 - 1e-12);
      v[j + 1] = std::sqrt(2.0) * boost::math::erf_inv(2 * u - 1);
      len2 += v[j + 1] * v[j + 1];
    }
    if (len2 < 1e-24) continue;
    for (auto& x : v) x /= std::sqrt(len2);
    out.emplace_back(Element<double>(p, std::move(v)));
  }
  return out;
}

std::vector<SnailSlice> snail_sample(const Polynomial<double>& f, int count, std::uint64_t seed) {
  require_locally_complex(f.params());
  if (count <= 0) count = default_slice_count(f.params().level());
  std::vector<SnailSlice> out;
  for (const auto& I : sample_directions(f.params(), count, seed)) {
    // Directions live in a fresh copy of the algebra; re-home them on f's.
    std::vector<double> c(I.unit().coeffs().begin(), I.unit().coeffs().end());
    out.push_back(make_slice(f, SliceDirection(Element<double>(f.params_ptr(), std::move(c)))));
  }
  return out;
}

Bounds bounds(const Polynomial<double>& f, double tol) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeZero, "bounds need deg f >= 1");
  require_locally_complex(f.params());
  const bool monic = f.is_monic(tol);
  if (!monic && f.params().level() >= 4)
    throw Error(ErrorCode::NonMonicHighLevel, "non-monic bounds fail beyond the octonions; no sphere holds all roots");
  const double lead = monic ? 1.0 : abs(f.leading());
  double sum2 = 0, sum = 0, max = 0;
  for (int k = 0; k < f.degree(); ++k) {
    const double a = abs(f.coeffs()[static_cast<std::size_t>(k)]);
    sum2 += a * a;
    sum += a;
    max = std::max(max, a);
  }
  return {monic, std::sqrt(lead * lead + sum2) / lead, 1.0 + max / lead, std::max(1.0, sum / lead)};
}

RhoEstimate rho_estimate(const Polynomial<double>& f, double tol) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeZero, "rho needs deg f >= 1");
  require_locally_complex(f.params());
  RhoEstimate out{0.0, f.params().level() > 3};
  if (!out.partial) {
    for (const Complex& z : companion_roots(f, tol)) out.rho = std::max(out.rho, std::abs(z));
    return out;
  }
  SphericalOptions<double> opts;
  opts.tol = tol;
  const SphericalReport<double> report = spherical_classes(f, opts);
  for (const auto& c : report.classes) out.rho = std::max(out.rho, std::sqrt(std::max(0.0, c.cls.norm)));
  for (double r : report.central_roots) out.rho = std::max(out.rho, std::fabs(r));
  return out;
}

GaussLucasReport gauss_lucas_spherical_check(const Polynomial<double>& f, double tol) {
  require_locally_complex(f.params());
  GaussLucasReport out;
  if (f.degree() < 1) return out;
  out.companion_roots = companion_roots(f, tol);
  out.hull = convex_hull_2d(out.companion_roots);
  for (const auto& c : critical_classes(f, tol)) {
    const Complex z = class_point(c.cls);
    const HullVerdict v = point_in_hull(z, out.hull, tol, HullTopology::Relative);
    out.classes.push_back({c.cls, z, v});
    if (v == HullVerdict::Outside) out.pass = false;
  }
  return out;
}

HullVerdict companion_hull_membership(const Polynomial<double>& f, const Element<double>& lambda, double tol) {
  require_locally_complex(f.params());
  const SliceDirection I = SliceDirection::through(lambda, tol);
  const std::vector<Complex> hull = convex_hull_2d(companion_roots(f, tol));
  return point_in_hull(I.project(lambda), hull, tol, HullTopology::Relative);
}

QuadraticCriticalReport gauss_lucas_quadratic_check(const Polynomial<double>& f, double tol) {
  if (!f.params().is_division_algebra())
    throw Error(ErrorCode::NotDivisionAlgebra, "the quadratic critical point test needs C, H or O");
  if (f.degree() != 2) throw Error(ErrorCode::InvalidArgument, "expected a quadratic");
  Element<double> lambda = -cd_mul(inverse(f.coeffs()[2] * 2.0, tol), f.coeffs()[1]);
  const HullVerdict v = companion_hull_membership(f, lambda, tol);
  return {std::move(lambda), v};
}

std::vector<JensenSphere> jensen_spheres(const CentralPolynomial<double>& g, const SolverOptions& solver) {
  std::vector<JensenSphere> out;
  if (g.degree() < 2) return out;
  for (const auto& c : candidate_classes(g, solver).classes) {
    const Complex z = class_point(c.cls);
    out.push_back({z.real(), z.imag()});
  }
  return out;
}

bool class_in_sphere(const QuadraticClass<double>& q, const JensenSphere& s, double tol) {
  const double dx = q.trace / 2 - s.center;
  const double lhs = dx * dx + (q.norm - q.trace * q.trace / 4);
  return lhs <= s.radius * s.radius + tol * (1 + s.radius * s.radius);
}

namespace {

JensenReport jensen_against(std::vector<JensenSphere> spheres, const Polynomial<double>& f, double tol) {
  JensenReport out{std::move(spheres), {}, true};
  for (const auto& c : critical_classes(f, tol)) {
    JensenClassVerdict v{c.cls, std::nullopt};
    for (std::size_t k = 0; k < out.spheres.size(); ++k) {
      if (class_in_sphere(c.cls, out.spheres[k], tol)) {
        v.sphere = k;
        break;
      }
    }
    if (!v.sphere) out.pass = false;
    out.classes.push_back(v);
  }
  return out;
}

}  // namespace

JensenReport jensen_check(const Polynomial<double>& f, double tol) {
  require_locally_complex(f.params());
  if (!f.has_central_coeffs(tol)) throw Error(ErrorCode::NonRealCoefficients, "Jensen spheres need real coefficients");
  SolverOptions solver;
  solver.tol = tol;
  return jensen_against(jensen_spheres(demote_central(f, tol), solver), f, tol);
}

JensenReport jensen_check_companion(const Polynomial<double>& f, double tol) {
  require_locally_complex(f.params());
  SolverOptions solver;
  solver.tol = tol;
  return jensen_against(jensen_spheres(companion(f, tol), solver), f, tol);
}

}  // namespace cdpoly
