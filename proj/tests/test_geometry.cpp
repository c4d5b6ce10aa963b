#include <gtest/gtest.h>

#include <cmath>

#include "cdpoly/geometry.hpp"
#include "support/random.hpp"

using namespace cdpoly;
using cdpoly::testing::Rng;

namespace {

using E = Element<double>;
using P = Polynomial<double>;

struct Quaternions : ::testing::Test {
  ParamsPtr<double> h = main_sequence<double>(2);
  E zero = E(h), one = E::scalar(h, 1);
  E i = E::basis(h, 1), j = E::basis(h, 2), k = E::basis(h, 3);
};

}  // namespace

TEST(Hull, DegenerateCases) {
  const std::vector<Complex> point{Complex(1, 1)};
  EXPECT_EQ(convex_hull_2d(point).size(), 1u);
  EXPECT_EQ(point_in_hull(Complex(1, 1), convex_hull_2d(point), 1e-9), HullVerdict::Boundary);
  const auto seg = convex_hull_2d({Complex(0, 1), Complex(0, -1), Complex(0, 0.5)});
  ASSERT_EQ(seg.size(), 2u);
  EXPECT_EQ(point_in_hull(Complex(0, 0), seg, 1e-9), HullVerdict::Boundary);
  EXPECT_EQ(point_in_hull(Complex(0, 0), seg, 1e-9, HullTopology::Relative), HullVerdict::Inside);
  EXPECT_EQ(point_in_hull(Complex(0, 1), seg, 1e-9, HullTopology::Relative), HullVerdict::Boundary);
  EXPECT_EQ(point_in_hull(Complex(0.1, 0), seg, 1e-9), HullVerdict::Outside);
  EXPECT_EQ(point_in_hull(Complex(0, 0), std::vector<Complex>{}, 1e-9), HullVerdict::Outside);
}

TEST(Hull, SquareWithInteriorPoints) {
  const auto hull = convex_hull_2d({Complex(0, 0), Complex(1, 0), Complex(1, 1), Complex(0, 1), Complex(0.5, 0.5),
                                    Complex(0.5, 0), Complex(0.2, 0.7)});
  ASSERT_EQ(hull.size(), 4u);  // collinear midpoint dropped
  double area = 0;
  for (std::size_t n = 0; n < hull.size(); ++n) {
    const Complex a = hull[n], b = hull[(n + 1) % hull.size()];
    area += a.real() * b.imag() - b.real() * a.imag();
  }
  EXPECT_GT(area, 0) << "counterclockwise";
  EXPECT_EQ(point_in_hull(Complex(0.5, 0.5), hull, 1e-9), HullVerdict::Inside);
  EXPECT_EQ(point_in_hull(Complex(1, 0.5), hull, 1e-9), HullVerdict::Boundary);
  EXPECT_EQ(point_in_hull(Complex(1 + 1e-10, 0.5), hull, 1e-9), HullVerdict::Boundary);
  EXPECT_EQ(point_in_hull(Complex(1.01, 0.5), hull, 1e-9), HullVerdict::Outside);
}

TEST(Hull, RandomPointsAreCovered) {
  Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    std::vector<Complex> pts;
    for (int n = 0; n < 30; ++n) pts.emplace_back(cdpoly::testing::uniform_real(rng), cdpoly::testing::uniform_real(rng));
    const auto hull = convex_hull_2d(pts);
    for (const auto& p : pts) EXPECT_NE(point_in_hull(p, hull, 1e-9), HullVerdict::Outside);
    for (std::size_t n = 0; n < hull.size(); ++n) {
      const Complex a = hull[n], b = hull[(n + 1) % hull.size()], c = hull[(n + 2) % hull.size()];
      EXPECT_GT((b - a).real() * (c - b).imag() - (b - a).imag() * (c - b).real(), 0);
    }
  }
}

TEST_F(Quaternions, SliceDirectionValidation) {
  EXPECT_NO_THROW(SliceDirection{i});
  EXPECT_THROW(SliceDirection{i + j}, Error);
  EXPECT_THROW(SliceDirection{one}, Error);
  const auto s = SliceDirection::through(one * 3.0 + j * 2.0);
  EXPECT_TRUE((s.unit() - j).is_zero(1e-15));
  EXPECT_TRUE((SliceDirection::through(one * 2.0).unit() - i).is_zero());
  auto sq = split_quaternions<double>();
  try {
    SliceDirection(E::basis(sq, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLocallyComplex);
  }
}

TEST_F(Quaternions, ProjectionExamples) {
  const P real(h, {one * 2.0, one * -3.0, one});
  const auto pr = slice_project(real, SliceDirection(j));
  ASSERT_EQ(pr.coeffs.size(), 3u);
  EXPECT_EQ(pr.coeffs[1], Complex(-3, 0));
  for (double v : pr.perp_norms) EXPECT_EQ(v, 0.0);

  const P f(h, {zero, one, i});  // i x^2 + x
  const auto perp = slice_project(f, SliceDirection(j));
  ASSERT_EQ(perp.coeffs.size(), 2u);  // f_I = x
  EXPECT_EQ(perp.coeffs[1], Complex(1, 0));
  EXPECT_DOUBLE_EQ(perp.perp_norms[2], 1.0);

  const double alpha = 0.6;
  const E I = i * alpha + j * 0.8;
  const auto tilted = make_slice(f, SliceDirection(I));
  ASSERT_EQ(tilted.projected.size(), 3u);
  EXPECT_NEAR(tilted.projected[2].imag(), alpha, 1e-15);
  // roots 0 and -1/(alpha i) = i/alpha: a segment from 0 to alpha^{-1} I
  ASSERT_EQ(tilted.hull.size(), 2u);
  double far = std::max(std::abs(tilted.hull[0]), std::abs(tilted.hull[1]));
  EXPECT_NEAR(far, 1 / alpha, 1e-12);
}

TEST_F(Quaternions, ProjectionShrinksCoefficients) {
  Rng rng(42);
  const P f = cdpoly::testing::random_polynomial(h, 4, rng);
  for (const auto& s : snail_sample(f, 16, 7)) {
    const auto pr = slice_project(f, s.direction);
    for (std::size_t n = 0; n < pr.coeffs.size(); ++n) EXPECT_LE(std::abs(pr.coeffs[n]), abs(f.coeffs()[n]) + 1e-12);
  }
}

TEST_F(Quaternions, RootsLieInTheirSlice) {
  // lambda a root of f in C_I means f_I(lambda) = 0 and the perpendicular part vanishes too.
  Rng rng(43);
  for (int t = 0; t < 10; ++t) {
    const E lambda = cdpoly::testing::random_element(h, rng);
    const P f = cdpoly::testing::random_polynomial(h, 2, rng) * P::linear_factor(lambda);
    const SliceDirection I = SliceDirection::through(lambda);
    const Complex z = I.project(lambda);
    const auto pr = slice_project(f, I);
    EXPECT_LT(std::abs(horner(pr.coeffs, z)), 1e-10);
  }
}

TEST_F(Quaternions, SnailMembershipExamples) {
  P q(h, {-one, zero, one});
  const P f = q * P::linear_factor(i) * P::linear_factor(i) + P(h, {j});
  EXPECT_EQ(in_snail(f, i, 1e-7).verdict, HullVerdict::Boundary);

  const P g(h, {zero, one, i});
  EXPECT_EQ(in_snail(g, -i, 1e-7).verdict, HullVerdict::Outside);
  EXPECT_EQ(in_snail(g, i * 0.5, 1e-7).verdict, HullVerdict::Inside);
  // The scalar 1 is outside (the slice through e1 is a segment on the imaginary axis).
  EXPECT_EQ(in_snail(g, one, 1e-7).verdict, HullVerdict::Outside);
  // constant f_I: whole plane
  EXPECT_EQ(in_snail(P(h, {i}), j * 5.0).verdict, HullVerdict::Inside);
}

TEST(Snail, SampleIsDeterministicAndUnit) {
  auto o = main_sequence<double>(3);
  Rng rng(44);
  const P f = cdpoly::testing::random_polynomial(o, 3, rng, true);
  const auto a = snail_sample(f, 20, 5), b = snail_sample(f, 20, 5), c = snail_sample(f, 20, 6);
  ASSERT_EQ(a.size(), 20u);
  bool differs = false;
  for (std::size_t n = 0; n < a.size(); ++n) {
    EXPECT_EQ(a[n].direction.unit(), b[n].direction.unit());
    differs |= !(a[n].direction.unit() == c[n].direction.unit());
    EXPECT_NEAR(norm(a[n].direction.unit()), 1.0, 1e-12);
    EXPECT_NEAR(trace(a[n].direction.unit()), 0.0, 1e-15);
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(default_slice_count(2), 256);
  EXPECT_EQ(default_slice_count(3), 128);
  EXPECT_EQ(default_slice_count(1), 2);
  EXPECT_EQ(snail_sample(P(main_sequence<double>(1), {E::scalar(main_sequence<double>(1), 1), E::scalar(main_sequence<double>(1), 1)})).size(), 2u);
}

TEST(Snail, MonicSlicesInsideR3Ball) {
  Rng rng(45);
  for (int level = 2; level <= 4; ++level) {
    auto p = main_sequence<double>(level);
    for (int t = 0; t < 5; ++t) {
      const P f = cdpoly::testing::random_polynomial(p, 4, rng, true);
      const double r3 = bounds(f).r3;
      for (const auto& s : snail_sample(f, 32, static_cast<std::uint64_t>(t)))
        for (const Complex& v : s.hull) EXPECT_LE(std::abs(v), r3 + 1e-9);
    }
  }
}

TEST(Snail, RealCoefficientSlicesCoincide) {
  auto o = main_sequence<double>(3);
  const P f(o, {E::scalar(o, 2), E::scalar(o, -1), E::scalar(o, 0.5), E::scalar(o, 1)});
  const auto slices = snail_sample(f, 10, 1);
  for (const auto& s : slices) {
    ASSERT_EQ(s.hull.size(), slices[0].hull.size());
    for (std::size_t n = 0; n < s.hull.size(); ++n) EXPECT_NEAR(std::abs(s.hull[n] - slices[0].hull[n]), 0.0, 1e-12);
  }
}

TEST(Snail, UnboundedFamily) {
  // i x^2 + x: the slice segment has length 1/alpha for alpha = <I, i>.
  auto h = main_sequence<double>(2);
  const P f(h, {E(h), E::scalar(h, 1), E::basis(h, 1)});
  double previous = 0;
  for (double alpha : {0.5, 0.1, 0.01, 0.001}) {
    const E I = E::basis(h, 1) * alpha + E::basis(h, 2) * std::sqrt(1 - alpha * alpha);
    const auto s = make_slice(f, SliceDirection(I));
    const double len = hull_diameter(s.hull);
    EXPECT_NEAR(len, 1 / alpha, 1e-6 / alpha);
    EXPECT_GT(len, previous);
    previous = len;
  }
}

TEST_F(Quaternions, BoundsExamples) {
  const P xn(h, {zero, zero, zero, one});
  const auto b = bounds(xn);
  EXPECT_EQ(b.r1, 1.0);
  EXPECT_EQ(b.r2, 1.0);
  EXPECT_EQ(b.r3, 1.0);
  const P f = P::linear_factor(i) * P::linear_factor(j) * P::linear_factor(k);
  EXPECT_NEAR(bounds(f).r3, 1 + 2 * std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(bounds(f).r1, std::sqrt(8.0), 1e-12);
  EXPECT_NEAR(bounds(f).r2, 1 + std::sqrt(3.0), 1e-12);
  try {
    bounds(P(h, {one}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeZero);
  }
  const auto nm = bounds(P(h, {one, i * 2.0}));
  EXPECT_FALSE(nm.monic);
  EXPECT_DOUBLE_EQ(nm.r3, 1.0);
  EXPECT_DOUBLE_EQ(nm.r1, std::sqrt(5.0) / 2);
}

TEST(Bounds, NonMonicRefusedInSedenions) {
  auto s = main_sequence<double>(4);
  const P f(s, {E(s), E(s), E::basis(s, 1) + E::basis(s, 10)});
  try {
    bounds(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonMonicHighLevel);
  }
  EXPECT_NO_THROW(bounds(P(s, {E::basis(s, 3), E::scalar(s, 1)})));
}

TEST(Bounds, CompanionRootsWithinR3) {
  Rng rng(46);
  auto o = main_sequence<double>(3);
  for (int t = 0; t < 30; ++t) {
    const P f = cdpoly::testing::random_polynomial(o, static_cast<int>(cdpoly::testing::uniform_int(rng, 1, 6)), rng, true);
    const Bounds b = bounds(f);
    for (const auto& cl : complex_roots(companion(f)).clusters) {
      EXPECT_LE(std::abs(cl.center), b.r3 + 1e-9);
      EXPECT_LT(std::abs(cl.center), b.r1);
      EXPECT_LT(std::abs(cl.center), b.r2);
    }
    if (f.degree() >= 2)
      for (const auto& cl : complex_roots(companion(derivative(f))).clusters) EXPECT_LE(std::abs(cl.center), b.r3 + 1e-9);
  }
}

TEST_F(Quaternions, SpectralRadius) {
  const P f = P::linear_factor(i) * P::linear_factor(j) * P::linear_factor(k);
  const auto r = rho_estimate(f);
  EXPECT_FALSE(r.partial);
  EXPECT_NEAR(r.rho, 1.0, 1e-9);
  EXPECT_GT(rho_estimate(derivative(f)).rho, 1.0 + 1e-6);
  EXPECT_NEAR(rho_estimate(P::linear_factor(one * 2.5)).rho, 2.5, 1e-15);
  auto s = main_sequence<double>(4);
  const auto rs = rho_estimate(P::central(s, CentralPolynomial<double>({4, 0, 1})));
  EXPECT_TRUE(rs.partial);
  EXPECT_NEAR(rs.rho, 2.0, 1e-9);
}

TEST(GaussLucas, QuadraticOctonions) {
  Rng rng(47);
  auto o = main_sequence<double>(3);
  for (int t = 0; t < 20; ++t) {
    const E a = cdpoly::testing::random_element(o, rng), b = cdpoly::testing::random_element(o, rng);
    const E c = cdpoly::testing::random_nonzero_element(o, rng);
    const P f = poly_scale(c, P::linear_factor(a)) * P::linear_factor(b);
    const auto r = gauss_lucas_quadratic_check(f, 1e-9);
    EXPECT_TRUE((r.critical_point - (a + b) * 0.5).is_zero(1e-9));
    EXPECT_NE(r.verdict, HullVerdict::Outside);
  }
}

TEST(GaussLucas, ConstructedSphericalCriticalClass) {
  Rng rng(48);
  auto h = main_sequence<double>(2);
  for (int t = 0; t < 10; ++t) {
    const auto q = cdpoly::testing::random_nonreal_class<double>(rng);
    P g = cdpoly::testing::random_polynomial(h, 2, rng);
    g = P(h, {g.coeffs()[0], g.coeffs()[1], E::scalar(h, 5.0)});
    const P df = poly_mul(g, quadratic(q));
    const P f = cdpoly::testing::antiderivative(df, cdpoly::testing::random_element(h, rng));
    const auto r = gauss_lucas_spherical_check(f);
    EXPECT_GE(r.classes.size(), 1u);
    EXPECT_TRUE(r.pass);
  }
}

TEST(GaussLucas, SedenionCounterexample) {
  auto s = main_sequence<double>(4);
  const E a = E::basis(s, 1) + E::basis(s, 10);
  const E b = E::basis(s, 7) + E::basis(s, 12);
  const P f(s, {E(s), E(s), a});
  EXPECT_TRUE(eval(derivative(f), b).is_zero());
  EXPECT_EQ(companion(f), CentralPolynomial<double>({0, 0, 0, 0, 2}));
  EXPECT_EQ(companion_hull_membership(f, b), HullVerdict::Outside);
}

TEST(Jensen, HandExample) {
  auto h = main_sequence<double>(2);
  const P f = P::central(h, CentralPolynomial<double>({-1, 1, -1, 1}));  // (x^2+1)(x-1)
  const auto r = jensen_check(f);
  ASSERT_EQ(r.spheres.size(), 1u);
  EXPECT_NEAR(r.spheres[0].center, 0.0, 1e-12);
  EXPECT_NEAR(r.spheres[0].radius, 1.0, 1e-12);
  ASSERT_EQ(r.classes.size(), 1u);
  EXPECT_NEAR(r.classes[0].cls.trace, 2.0 / 3, 1e-9);
  EXPECT_NEAR(r.classes[0].cls.norm, 1.0 / 3, 1e-9);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(class_in_sphere(QuadraticClass<double>{2.0 / 3, 1.0 / 3}, JensenSphere{0, 1}));
  EXPECT_FALSE(class_in_sphere(QuadraticClass<double>{6, 10}, JensenSphere{0, 1}));
}

TEST(Jensen, RealRootsOnly) {
  auto o = main_sequence<double>(3);
  const P f = P::central(o, CentralPolynomial<double>({-6, 11, -6, 1}));  // (x-1)(x-2)(x-3)
  const auto r = jensen_check(f);
  EXPECT_TRUE(r.spheres.empty());
  EXPECT_TRUE(r.classes.empty());
  EXPECT_TRUE(r.pass);
}

TEST(Jensen, RejectsNonRealCoefficients) {
  auto h = main_sequence<double>(2);
  try {
    jensen_check(P(h, {E::basis(h, 1), E::scalar(h, 1)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonRealCoefficients);
  }
}

TEST(Jensen, RandomRealPolynomials) {
  Rng rng(49);
  for (int level = 2; level <= 4; ++level) {
    auto p = main_sequence<double>(level);
    for (int t = 0; t < 10; ++t) {
      const P f = cdpoly::testing::random_real_polynomial(p, static_cast<int>(cdpoly::testing::uniform_int(rng, 2, 6)), rng);
      EXPECT_TRUE(jensen_check(f).pass);
      EXPECT_TRUE(jensen_check_companion(f).pass);
    }
  }
}
