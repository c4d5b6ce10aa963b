#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cdpoly/complex_roots.hpp"
#include "cdpoly/root_finder.hpp"
#include "support/random.hpp"

using namespace cdpoly;
using cdpoly::testing::Rng;

namespace {

double eval_real(const std::vector<double>& c, double x) {
  double v = 0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
  return v;
}

// Real roots by sign changes on a fine grid, refined by bisection.  Only
// simple roots are seen, which is all the random ensemble produces.
std::vector<double> bisection_roots(const std::vector<double>& c, double bound) {
  std::vector<double> out;
  const int steps = 20000;
  double prev_x = -bound, prev = eval_real(c, prev_x);
  for (int s = 1; s <= steps; ++s) {
    const double x = -bound + 2 * bound * s / steps;
    const double v = eval_real(c, x);
    if ((prev < 0) != (v < 0)) {
      double lo = prev_x, hi = x;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        ((eval_real(c, mid) < 0) == (eval_real(c, lo) < 0) ? lo : hi) = mid;
      }
      out.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev = v;
  }
  return out;
}

std::vector<Complex> centers(const ComplexRootSet& s) {
  std::vector<Complex> out;
  for (const auto& c : s.clusters) out.push_back(c.center);
  return out;
}

}  // namespace

TEST(ComplexRoots, UnitCircleQuadratic) {
  const std::vector<double> c{1, 0, 1};
  const auto r = complex_roots(std::span<const double>(c));
  ASSERT_EQ(r.clusters.size(), 2u);
  for (const auto& cl : r.clusters) {
    EXPECT_NEAR(cl.center.real(), 0.0, 1e-14);
    EXPECT_NEAR(std::fabs(cl.center.imag()), 1.0, 1e-14);
    EXPECT_EQ(cl.multiplicity, 1);
  }
}

TEST(ComplexRoots, TripleConjugatePair) {
  const CentralPolynomial<double> p({1, 0, 3, 0, 3, 0, 1});
  const auto r = complex_roots(p);
  ASSERT_EQ(r.clusters.size(), 2u);
  for (const auto& cl : r.clusters) {
    EXPECT_EQ(cl.multiplicity, 3);
    EXPECT_NEAR(std::abs(cl.center), 1.0, 1e-12);
    EXPECT_NEAR(cl.center.real(), 0.0, 1e-12);
  }
  const auto cand = candidate_classes(p);
  ASSERT_EQ(cand.classes.size(), 1u);
  EXPECT_NEAR(cand.classes[0].cls.trace, 0.0, 1e-12);
  EXPECT_NEAR(cand.classes[0].cls.norm, 1.0, 1e-12);
  EXPECT_EQ(cand.classes[0].multiplicity, 3);
}

TEST(ComplexRoots, CubicDerivativeCompanionModuli) {
  // 9x^4 + 12x^2 - 4x + 3: the product of the roots is 1/3, so the moduli
  // straddle 1.  Two conjugate pairs.
  const std::vector<double> c{3, -4, 12, 0, 9};
  const auto r = complex_roots(std::span<const double>(c));
  ASSERT_EQ(r.clusters.size(), 4u);
  std::vector<double> mod;
  double prod = 1;
  for (const auto& cl : r.clusters) {
    mod.push_back(std::abs(cl.center));
    prod *= std::abs(cl.center);
    EXPECT_LT(std::abs(horner(std::vector<Complex>(c.begin(), c.end()), cl.center)), 1e-12);
  }
  std::sort(mod.begin(), mod.end());
  EXPECT_NEAR(prod, 1.0 / 3.0, 1e-12);
  EXPECT_NEAR(mod[0], mod[1], 1e-12);
  EXPECT_NEAR(mod[2], mod[3], 1e-12);
  EXPECT_LT(mod[0], 1.0);
  EXPECT_GT(mod[3], 1.0);
}

TEST(ComplexRoots, BiquadraticClasses) {
  const CentralPolynomial<double> p({4, 0, 6, 0, 1});
  auto cand = candidate_classes(p);
  ASSERT_EQ(cand.classes.size(), 2u);
  std::sort(cand.classes.begin(), cand.classes.end(),
            [](const auto& a, const auto& b) { return a.cls.norm < b.cls.norm; });
  EXPECT_NEAR(cand.classes[0].cls.trace, 0.0, 1e-12);
  EXPECT_NEAR(cand.classes[0].cls.norm, 3 - std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(cand.classes[1].cls.norm, 3 + std::sqrt(5.0), 1e-12);
  EXPECT_TRUE(cand.real_roots.empty());
}

TEST(ComplexRoots, DoubleZero) {
  const CentralPolynomial<double> p({0, 0, 2});
  const auto cand = candidate_classes(p);
  EXPECT_TRUE(cand.classes.empty());
  ASSERT_EQ(cand.real_roots.size(), 1u);
  EXPECT_EQ(cand.real_roots[0].value, 0.0);
  EXPECT_EQ(cand.real_roots[0].multiplicity, 2);
}

TEST(ComplexRoots, RejectsConstants) {
  const std::vector<double> c{5};
  try {
    complex_roots(std::span<const double>(c));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeZero);
  }
}

TEST(ComplexRoots, RandomResidualsAndRealRootOracle) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const int deg = static_cast<int>(cdpoly::testing::uniform_int(rng, 1, 12));
    std::vector<double> c(static_cast<std::size_t>(deg + 1));
    for (auto& v : c) v = cdpoly::testing::uniform_real(rng, -3, 3);
    if (std::fabs(c.back()) < 0.1) c.back() = 1.0;
    const auto r = complex_roots(std::span<const double>(c));
    double norm_inf = 0;
    for (double v : c) norm_inf = std::max(norm_inf, std::fabs(v));
    EXPECT_LE(r.max_residual, 1e-8 * norm_inf * std::pow(1 + cauchy_bound(std::vector<Complex>(c.begin(), c.end())), deg));
    EXPECT_LE(r.max_relative_residual, 1e-8);
    EXPECT_EQ(r.roots.size(), static_cast<std::size_t>(deg));
    // conjugate closure
    const auto z = centers(r);
    for (const Complex& w : z) {
      const bool closed = std::any_of(z.begin(), z.end(), [&](Complex u) { return std::abs(u - std::conj(w)) < 1e-9 * (1 + std::abs(w)); });
      EXPECT_TRUE(closed);
    }
    // every real root found by bisection is matched by a real cluster
    const double bound = cauchy_bound(std::vector<Complex>(c.begin(), c.end())) + 1;
    for (double x : bisection_roots(c, bound)) {
      const bool found = std::any_of(z.begin(), z.end(), [&](Complex u) {
        return u.imag() == 0.0 && std::fabs(u.real() - x) < 1e-6 * (1 + std::fabs(x));
      });
      EXPECT_TRUE(found) << "missing real root " << x << " deg " << deg;
    }
  }
}

TEST(ComplexRoots, Deterministic) {
  const std::vector<double> c{1, -2, 3, -4, 5, 1};
  const auto a = complex_roots(std::span<const double>(c));
  const auto b = complex_roots(std::span<const double>(c));
  ASSERT_EQ(a.clusters.size(), b.clusters.size());
  for (std::size_t i = 0; i < a.clusters.size(); ++i) EXPECT_EQ(a.clusters[i].center, b.clusters[i].center);
}

TEST(ComplexRoots, CauchyBoundContainsRoots) {
  const std::vector<Complex> c{Complex(2, 1), Complex(-3, 0), Complex(0, 1), Complex(1, 0)};
  const double rb = cauchy_bound(c);
  for (const auto& cl : complex_roots(std::span<const Complex>(c)).clusters) EXPECT_LE(std::abs(cl.center), rb * (1 + 1e-12));
}
