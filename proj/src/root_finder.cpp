#include "cdpoly/root_finder.hpp"

#include <algorithm>
#include <cmath>

namespace cdpoly {

namespace {

// Tolerances tried, from tight to loose, when turning a numeric trace or norm
// into an exact rational.  Every lift is verified exactly afterwards.
constexpr double kLiftTolerances[] = {1e-12, 1e-10, 1e-8, 1e-6};

template <Scalar S>
std::vector<S> lift_scalar(double x, std::int64_t max_den) {
  if constexpr (is_exact_v<S>) {
    std::vector<S> out;
    for (double rtol : kLiftTolerances) {
      auto q = rationalize(x, max_den, rtol * std::max(1.0, std::fabs(x)));
      if (q && std::find(out.begin(), out.end(), *q) == out.end()) out.push_back(*q);
    }
    return out;
  } else {
    (void)max_den;
    return {x};
  }
}

template <Scalar S>
bool remainder_vanishes(const QuadraticDivision<S>& d, double band) {
  return d.linear.is_zero(band) && d.constant.is_zero(band);
}

template <Scalar S>
double band_for(const Polynomial<S>& f, double tol) {
  return tol * (1.0 + coefficient_scale(f));
}

template <Scalar S>
bool class_less(const QuadraticClass<S>& a, const QuadraticClass<S>& b) {
  const double na = magnitude(a.norm), nb = magnitude(b.norm);
  if (na != nb) return na < nb;
  const double ta = magnitude(a.trace), tb = magnitude(b.trace);
  if (ta != tb) return ta < tb;
  if (a.norm != b.norm) return a.norm < b.norm;
  return a.trace < b.trace;
}

/// Exact or numeric (T, N) candidates for one numeric class, tightest first.
template <Scalar S>
std::vector<QuadraticClass<S>> lift_class(const QuadraticClass<double>& c, std::int64_t max_den) {
  std::vector<QuadraticClass<S>> out;
  const auto traces = lift_scalar<S>(c.trace, max_den);
  const auto norms = lift_scalar<S>(c.norm, max_den);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < traces.size(); ++i)
    for (std::size_t j = 0; j < norms.size(); ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& a, const auto& b) { return std::max(a.first, a.second) < std::max(b.first, b.second); });
  for (const auto& [i, j] : pairs) {
    QuadraticClass<S> q{traces[i], norms[j]};
    if (!(q.discriminant() < 0)) continue;
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

template <Scalar S>
std::vector<S> discovered_central_candidates(const Candidates& cands, std::int64_t max_den) {
  std::vector<S> out;
  for (const auto& r : cands.real_roots)
    for (const S& v : lift_scalar<S>(r.value, max_den))
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

}  // namespace

Candidates candidate_classes(std::span<const double> coeffs, const SolverOptions& options) {
  const ComplexRootSet roots = complex_roots(coeffs, options);
  Candidates out;
  for (const auto& cl : roots.clusters) {
    if (cl.center.imag() == 0.0) {
      out.real_roots.push_back({cl.center.real(), cl.multiplicity});
      continue;
    }
    // One representative per conjugate pair; the solver pairs them.
    if (cl.center.imag() < 0.0) {
      const bool has_partner = std::any_of(roots.clusters.begin(), roots.clusters.end(), [&](const RootCluster& o) {
        return o.center == std::conj(cl.center);
      });
      if (has_partner) continue;
    }
    const QuadraticClass<double> q{2.0 * cl.center.real(), std::norm(cl.center)};
    auto same = std::find_if(out.classes.begin(), out.classes.end(), [&](const CandidateClass& c) {
      return std::fabs(c.cls.trace - q.trace) <= options.tol * (1 + std::fabs(q.trace)) &&
             std::fabs(c.cls.norm - q.norm) <= options.tol * (1 + std::fabs(q.norm));
    });
    if (same != out.classes.end()) {
      same->multiplicity += cl.multiplicity;
    } else {
      out.classes.push_back({q, cl.multiplicity});
    }
  }
  std::sort(out.real_roots.begin(), out.real_roots.end(),
            [](const RealCandidate& a, const RealCandidate& b) { return a.value < b.value; });
  return out;
}

template <Scalar S>
SphericalTest<S> is_spherical_root(const Polynomial<S>& f, const QuadraticClass<S>& q, double tol) {
  SphericalTest<S> result{false, 0, f};
  if (f.is_zero()) return result;
  const double band = band_for(f, tol);
  while (result.quotient.degree() >= 2) {
    QuadraticDivision<S> d = divrem_quadratic(result.quotient, q);
    if (!remainder_vanishes(d, band)) break;
    result.quotient = std::move(d.quotient);
    ++result.multiplicity;
  }
  result.spherical = result.multiplicity > 0;
  return result;
}

template <Scalar S>
std::vector<S> central_roots(const Polynomial<S>& f, const std::vector<S>& candidates, double tol) {
  std::vector<S> out;
  const double band = band_for(f, tol);
  for (const S& r : candidates) {
    if (std::find(out.begin(), out.end(), r) != out.end()) continue;
    if (eval(f, Element<S>::scalar(f.params_ptr(), r)).is_zero(band)) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  if constexpr (!is_exact_v<S>) {
    // Numerically coincident candidates collapse to one.
    out.erase(std::unique(out.begin(), out.end(),
                          [tol](double a, double b) { return std::fabs(a - b) <= tol * (1 + std::fabs(a)); }),
              out.end());
  }
  return out;
}

template <Scalar S>
SphericalReport<S> spherical_classes(const Polynomial<S>& f, const SphericalOptions<S>& options) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeZero, "spherical classes need deg f >= 1");
  SphericalReport<S> report{{}, {}, f};

  std::vector<std::vector<QuadraticClass<S>>> groups;  // alternatives per class, tightest first
  std::vector<S> central_candidates = options.central_candidates;
  if (options.candidates) {
    for (const auto& q : *options.candidates) groups.push_back({q});
  } else {
    const CentralPolynomial<S> cf = companion(f, options.tol);
    SolverOptions solver = options.solver;
    solver.tol = options.tol;
    const Candidates cands = candidate_classes(cf, solver);
    for (const auto& c : cands.classes) {
      auto lifted = lift_class<S>(c.cls, options.max_denominator);
      if (!lifted.empty()) groups.push_back(std::move(lifted));
    }
    for (const S& v : discovered_central_candidates<S>(cands, options.max_denominator)) central_candidates.push_back(v);
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return class_less(a.front(), b.front()); });

  for (const auto& group : groups) {
    for (const auto& q : group) {
      const bool seen = std::any_of(report.classes.begin(), report.classes.end(),
                                    [&](const SphericalClass<S>& c) { return c.cls == q; });
      if (seen) break;
      SphericalTest<S> t = is_spherical_root(report.deflated, q, options.tol);
      if (t.spherical) {
        report.classes.push_back({q, t.multiplicity});
        report.deflated = std::move(t.quotient);
        break;
      }
    }
  }
  report.central_roots = central_roots(f, central_candidates, options.tol);
  return report;
}

template <Scalar S>
SphericalFactorization<S> spherical_factorization(const Polynomial<S>& f, const SphericalOptions<S>& options) {
  if (!f.params().is_division_algebra())
    throw Error(ErrorCode::NotDivisionAlgebra, "spherical factorization needs C, H or O");
  SphericalReport<S> report = spherical_classes(f, options);
  if (f.degree() % 2 == 0 && static_cast<int>(report.classes.size()) * 2 == f.degree() && report.deflated.degree() != 0) {
    throw Error(ErrorCode::NonCentralResult, "deg f = 2k with k classes must leave a constant factor");
  }
  return {std::move(report.deflated), std::move(report.classes)};
}

template <Scalar S>
ClassRoots<S> roots_in_class(const Polynomial<S>& f, const QuadraticClass<S>& q, double tol) {
  if (f.params().level() > 3) throw Error(ErrorCode::NotDivisionAlgebra, "class roots need an alternative algebra (level <= 3)");
  ClassRoots<S> out;
  if (f.is_zero()) {
    out.kind = ClassRootKind::Spherical;
    return out;
  }
  const QuadraticDivision<S> d = divrem_quadratic(f, q);
  const double band = band_for(f, tol);
  if (remainder_vanishes(d, band)) {
    out.kind = ClassRootKind::Spherical;
    return out;
  }
  const S n = norm(d.linear);
  if (near_zero(n, band * band)) return out;
  Element<S> lambda = -cd_mul(inverse(d.linear, 0.0), d.constant);
  const QuadraticClass<S> c = char_poly(lambda);
  bool member;
  if constexpr (is_exact_v<S>) {
    member = c == q;
  } else {
    const double loose = std::sqrt(tol);
    member = std::fabs(c.trace - q.trace) <= loose * (1 + std::fabs(q.trace)) &&
             std::fabs(c.norm - q.norm) <= loose * (1 + std::fabs(q.norm));
  }
  if (member) {
    out.kind = ClassRootKind::Isolated;
    out.root = std::move(lambda);
  }
  return out;
}

template <Scalar S>
RootCatalog<S> find_roots(const Polynomial<S>& f, const SphericalOptions<S>& options) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeZero, "root catalog needs deg f >= 1");
  RootCatalog<S> out;
  const CentralPolynomial<S> cf = companion(f, options.tol);
  SolverOptions solver = options.solver;
  solver.tol = options.tol;
  const Candidates cands = candidate_classes(cf, solver);
  for (const auto& c : cands.classes) {
    for (const auto& q : lift_class<S>(c.cls, options.max_denominator)) {
      ClassRoots<S> r = roots_in_class(f, q, options.tol);
      if (r.kind == ClassRootKind::Spherical) {
        out.spherical.push_back({q, is_spherical_root(f, q, options.tol).multiplicity});
        break;
      }
      if (r.kind == ClassRootKind::Isolated) {
        out.isolated.push_back(std::move(*r.root));
        break;
      }
    }
  }
  std::sort(out.spherical.begin(), out.spherical.end(),
            [](const auto& a, const auto& b) { return class_less(a.cls, b.cls); });
  std::vector<S> central_candidates = discovered_central_candidates<S>(cands, options.max_denominator);
  for (const S& v : options.central_candidates) central_candidates.push_back(v);
  out.central = central_roots(f, central_candidates, options.tol);
  return out;
}

#define CDPOLY_INSTANTIATE_ROOTS(S)                                                                         \
  template SphericalTest<S> is_spherical_root<S>(const Polynomial<S>&, const QuadraticClass<S>&, double);   \
  template std::vector<S> central_roots<S>(const Polynomial<S>&, const std::vector<S>&, double);            \
  template SphericalReport<S> spherical_classes<S>(const Polynomial<S>&, const SphericalOptions<S>&);       \
  template SphericalFactorization<S> spherical_factorization<S>(const Polynomial<S>&, const SphericalOptions<S>&); \
  template ClassRoots<S> roots_in_class<S>(const Polynomial<S>&, const QuadraticClass<S>&, double);          \
  template RootCatalog<S> find_roots<S>(const Polynomial<S>&, const SphericalOptions<S>&);

CDPOLY_INSTANTIATE_ROOTS(Rational)
CDPOLY_INSTANTIATE_ROOTS(double)

#undef CDPOLY_INSTANTIATE_ROOTS

}  // namespace cdpoly
