#include "cdpoly/complex_roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>

namespace cdpoly {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Angular offset of the starting circle; breaks the symmetry of real input.
constexpr double kStartPhase = 0.4;

struct HornerResult {
  Complex p;
  Complex dp;
  double bound;  // sum |c_k| |z|^k
};

HornerResult horner_with_derivative(std::span<const Complex> c, Complex z) {
  Complex p = c.back(), dp = 0;
  double bound = std::abs(c.back());
  const double az = std::abs(z);
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    bound = bound * az + std::abs(c[k]);
  }
  return {p, dp, bound};
}

std::vector<Complex> derivative_coeffs(std::span<const Complex> c, int order) {
  std::vector<Complex> d(c.begin(), c.end());
  for (int o = 0; o < order && d.size() > 1; ++o) {
    for (std::size_t k = 1; k < d.size(); ++k) d[k - 1] = d[k] * static_cast<double>(k);
    d.pop_back();
  }
  return d;
}

struct DisjointSet {
  std::vector<std::size_t> parent;
  explicit DisjointSet(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

/// Aberth iteration on a monic polynomial with nonzero constant term.
std::vector<Complex> aberth(std::span<const Complex> monic, int max_iterations, int& iterations, bool& converged) {
  const std::size_t n = monic.size() - 1;
  const double radius = cauchy_bound(monic);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + kStartPhase;
    z[k] = std::polar(radius, angle);
  }
  std::vector<bool> done(n, false);
  const double stop = 4.0 * static_cast<double>(n + 1) * kEps;
  converged = false;
  for (iterations = 0; iterations < max_iterations; ++iterations) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      const HornerResult h = horner_with_derivative(monic, z[k]);
      if (std::abs(h.p) <= stop * h.bound) {
        done[k] = true;
        continue;
      }
      all_done = false;
      Complex ratio;
      if (std::abs(h.dp) == 0.0) {
        ratio = Complex(radius * 1e-6, radius * 1e-6);
      } else {
        ratio = h.p / h.dp;
      }
      Complex repulsion = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex diff = z[k] - z[j];
        if (diff == Complex(0)) diff = Complex(kEps * (1 + std::abs(z[k])), 0);
        repulsion += 1.0 / diff;
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      if (std::abs(step) <= kEps * std::abs(z[k])) done[k] = true;
    }
    if (all_done) {
      converged = true;
      break;
    }
  }
  return z;
}

}  // namespace

Complex horner(std::span<const Complex> coeffs, Complex z) {
  Complex p = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) p = p * z + coeffs[k];
  return p;
}

double cauchy_bound(std::span<const Complex> coeffs) {
  const std::size_t n = coeffs.size() - 1;
  const double lead = std::abs(coeffs.back());
  std::vector<double> a(n);
  double hi = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = std::abs(coeffs[k]) / lead;
    hi = std::max(hi, 1.0 + a[k]);
  }
  auto g = [&](double x) {
    double s = 0, xp = 1;
    for (std::size_t k = 0; k < n; ++k) {
      s += a[k] * xp;
      xp *= x;
    }
    return xp - s;  // x^n - sum a_k x^k
  };
  double lo = 0.0;
  if (std::all_of(a.begin(), a.end(), [](double v) { return v == 0.0; })) return 0.0;
  for (int it = 0; it < 200 && hi - lo > kEps * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) >= 0 ? hi : lo) = mid;
  }
  return hi;
}

ComplexRootSet complex_roots(std::span<const double> coeffs, const SolverOptions& options) {
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  ComplexRootSet result = complex_roots(std::span<const Complex>(c), options);

  // Real input: snap near-real clusters onto the axis and pair the rest.
  for (auto& cl : result.clusters)
    if (std::fabs(cl.center.imag()) <= cl.radius) cl.center = Complex(cl.center.real(), 0.0);
  std::vector<bool> paired(result.clusters.size(), false);
  for (std::size_t i = 0; i < result.clusters.size(); ++i) {
    auto& a = result.clusters[i];
    if (paired[i] || a.center.imag() == 0.0) continue;
    std::size_t best = i;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < result.clusters.size(); ++j) {
      if (j == i || paired[j] || result.clusters[j].multiplicity != a.multiplicity) continue;
      const double d = std::abs(result.clusters[j].center - std::conj(a.center));
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best != i && best_dist <= std::max(a.radius, 1e-6 * (1 + std::abs(a.center)))) {
      auto& b = result.clusters[best];
      const Complex mean = 0.5 * (a.center + std::conj(b.center));
      a.center = mean;
      b.center = std::conj(mean);
      paired[i] = paired[best] = true;
    }
  }
  return result;
}

ComplexRootSet complex_roots(std::span<const Complex> coeffs, const SolverOptions& options) {
  if (coeffs.size() < 2 || coeffs.back() == Complex(0))
    throw Error(ErrorCode::DegreeZero, "root finding needs a polynomial of degree at least 1 with nonzero leading coefficient");

  ComplexRootSet result;

  // Exact zeros first.
  std::size_t zeros = 0;
  while (coeffs[zeros] == Complex(0)) ++zeros;
  std::vector<Complex> monic(coeffs.begin() + static_cast<std::ptrdiff_t>(zeros), coeffs.end());
  const Complex lead = monic.back();
  for (auto& v : monic) v /= lead;

  std::vector<Complex> z;
  result.converged = true;
  if (monic.size() == 2) {
    z.push_back(-monic[0]);
  } else if (monic.size() > 2) {
    z = aberth(monic, options.max_iterations, result.iterations, result.converged);
  }

  // Residuals on the stripped polynomial.
  std::vector<double> residual(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    const HornerResult h = horner_with_derivative(monic, z[k]);
    residual[k] = std::abs(h.p) * std::abs(lead);
    result.max_residual = std::max(result.max_residual, residual[k]);
    result.max_relative_residual = std::max(result.max_relative_residual, h.bound > 0 ? std::abs(h.p) / h.bound : 0.0);
  }

  // Clustering.  A root's multiplicity guess m counts its neighbours within
  // the cap; roots merge inside tol^(1/m), relative to max(1, |z|).
  const std::size_t n = z.size();
  std::vector<int> guess(n, 1);
  auto scale_of = [](Complex v) { return std::max(1.0, std::abs(v)); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && std::abs(z[i] - z[j]) <= options.cluster_cap * scale_of(z[i])) ++guess[i];
  auto radius_for = [&](int m, Complex v) {
    return scale_of(v) * std::min(options.cluster_cap, std::pow(options.tol, 1.0 / m));
  };
  DisjointSet sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) <= radius_for(std::max(guess[i], guess[j]), z[i])) sets.unite(i, j);

  std::vector<std::size_t> cluster_of(n);
  std::vector<std::size_t> root_ids;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = sets.find(i);
    auto it = std::find(root_ids.begin(), root_ids.end(), r);
    if (it == root_ids.end()) {
      root_ids.push_back(r);
      result.clusters.push_back({Complex(0), 0, 0.0});
      cluster_of[i] = result.clusters.size() - 1;
    } else {
      cluster_of[i] = static_cast<std::size_t>(it - root_ids.begin());
    }
    auto& cl = result.clusters[cluster_of[i]];
    cl.center += z[i];
    cl.multiplicity += 1;
  }
  for (auto& cl : result.clusters) {
    cl.center /= static_cast<double>(cl.multiplicity);
    cl.radius = cl.multiplicity > 1 ? radius_for(cl.multiplicity, cl.center) : options.tol * scale_of(cl.center);
    // Newton on p^(m-1), which has a simple root at an m-fold root.
    const std::vector<Complex> d = derivative_coeffs(monic, cl.multiplicity - 1);
    if (d.size() < 2) continue;
    Complex x = cl.center;
    double last = std::abs(horner(d, x));
    for (int it = 0; it < 8; ++it) {
      const HornerResult h = horner_with_derivative(d, x);
      if (h.dp == Complex(0)) break;
      const Complex step = h.p / h.dp;
      if (std::abs(step) > std::max(cl.radius, 1e-12 * scale_of(x))) break;
      const Complex next = x - step;
      const double value = std::abs(horner(d, next));
      if (value > last) break;
      x = next;
      last = value;
      if (std::abs(step) <= kEps * scale_of(x)) break;
    }
    cl.center = x;
  }

  if (zeros > 0) {
    result.clusters.push_back({Complex(0), static_cast<int>(zeros), 0.0});
    for (std::size_t k = 0; k < zeros; ++k) result.roots.push_back({Complex(0), result.clusters.size() - 1, 0.0});
  }
  for (std::size_t i = 0; i < n; ++i) result.roots.push_back({z[i], cluster_of[i], residual[i]});

  if (!result.converged && result.max_relative_residual > options.residual_tol)
    throw NoConvergence(result.iterations, std::move(result));
  result.converged = true;
  return result;
}

}  // namespace cdpoly
