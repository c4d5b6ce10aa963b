#include <gtest/gtest.h>

#include "cdpoly/algebra.hpp"
#include "support/random.hpp"

using namespace cdpoly;
using cdpoly::testing::random_element;
using cdpoly::testing::random_params;
using cdpoly::testing::Rng;

namespace {

using E = Element<Rational>;

E basis(const ParamsPtr<Rational>& p, std::size_t i) { return E::basis(p, i); }

struct Sedenions : ::testing::Test {
  ParamsPtr<Rational> s = main_sequence<Rational>(4);
  E a = basis(s, 1) + basis(s, 10);
  E b = basis(s, 7) + basis(s, 12);
};

// Doubling with the sign of the gamma term flipped, on raw coordinates of a
// main-sequence algebra.  Used to check that the zero-divisor test notices.
std::vector<Rational> flipped_mul(std::span<const Rational> x, std::span<const Rational> y);

std::vector<Rational> flipped_conj(std::span<const Rational> x) {
  std::vector<Rational> out(x.begin(), x.end());
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

std::vector<Rational> flipped_mul(std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() == 1) return {Rational(x[0] * y[0])};
  const std::size_t h = x.size() / 2;
  auto a = x.subspan(0, h), b = x.subspan(h), c = y.subspan(0, h), d = y.subspan(h);
  auto ac = flipped_mul(a, c);
  auto db = flipped_mul(flipped_conj(d), b);
  auto da = flipped_mul(d, a);
  auto bc = flipped_mul(b, flipped_conj(c));
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] + db[i];  // the correct rule subtracts here (gamma = -1)
    out[h + i] = da[i] + bc[i];
  }
  return out;
}

}  // namespace

TEST(Params, QuaternionsAndSplitQuaternions) {
  auto h = make_params<Rational>(Form::Gamma, 0, {-1, -1}, 2);
  EXPECT_TRUE(h->is_locally_complex());
  EXPECT_TRUE(h->is_division_algebra());
  EXPECT_EQ(h->dim(), 4u);
  auto split = make_params<Rational>(Form::Gamma, 0, {-1, 1}, 2);
  EXPECT_FALSE(split->is_locally_complex());
  EXPECT_EQ(*split, *split_quaternions<Rational>());
}

TEST(Params, Validation) {
  try {
    make_params<Rational>(Form::Mu, Rational(-1, 4), {-1}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateMu);
  }
  try {
    make_params<Rational>(Form::Gamma, 0, {-1, 0}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroGamma);
  }
  try {
    make_params<Rational>(Form::Mu, 1, {-1, -1}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadLength);
  }
  try {
    E(main_sequence<Rational>(2), std::vector<Rational>(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadLength);
  }
}

TEST(Params, WeightsAreNonzero) {
  Rng rng(11);
  for (int level = 1; level <= 5; ++level) {
    auto p = random_params(level, rng);
    ASSERT_EQ(p->norm_weights().size(), std::size_t{1} << (level - 1));
    for (const auto& w : p->norm_weights()) EXPECT_NE(sgn(w), 0);
  }
}

TEST(Multiplication, UnitAndQuaternionTable) {
  auto h = main_sequence<Rational>(2);
  Rng rng(1);
  const E x = random_element(h, rng);
  EXPECT_EQ(E::scalar(h, 1) * x, x);
  EXPECT_EQ(x * E::scalar(h, 1), x);
  EXPECT_EQ(basis(h, 1) * basis(h, 2), basis(h, 3));
  EXPECT_EQ(basis(h, 2) * basis(h, 1), -basis(h, 3));
  EXPECT_EQ(basis(h, 1) * basis(h, 1), E::scalar(h, -1));
}

TEST(Multiplication, ParamsMismatch) {
  auto h = main_sequence<Rational>(2);
  auto o = main_sequence<Rational>(3);
  try {
    (void)(basis(h, 1) * basis(o, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParamsMismatch);
  }
}

TEST_F(Sedenions, ZeroDivisorPair) {
  EXPECT_TRUE((a * b).is_zero());
  EXPECT_EQ(norm(a), 2);
  EXPECT_EQ(b * b, E::scalar(s, -2));
  EXPECT_EQ(char_poly(b), (QuadraticClass<Rational>{0, 2}));
  // Norm composition breaks here: 0 on the left, 4 on the right.
  EXPECT_EQ(norm(a * b), 0);
  EXPECT_EQ(norm(a) * norm(b), 4);
  EXPECT_FALSE(quadratically_equivalent(a, E(s)));
}

TEST_F(Sedenions, SignMutationDestroysZeroDivisor) {
  auto wrong = flipped_mul(a.coeffs(), b.coeffs());
  EXPECT_TRUE(std::any_of(wrong.begin(), wrong.end(), [](const Rational& v) { return sgn(v) != 0; }));
}

TEST(Conjugation, Examples) {
  auto h = main_sequence<Rational>(3);
  EXPECT_EQ(conj(E::scalar(h, 1)), E::scalar(h, 1));
  for (std::size_t m = 1; m < h->dim(); ++m) EXPECT_EQ(conj(basis(h, m)), -basis(h, m));
  auto mu = make_params<Rational>(Form::Mu, 2, {}, 1);
  const E l1 = E::basis(mu, 1, Rational(3));
  EXPECT_EQ(conj(l1), E(mu, {3, -3}));
}

TEST(TraceNorm, Examples) {
  auto h = main_sequence<Rational>(2);
  EXPECT_EQ(trace(E::scalar(h, 1)), 2);
  EXPECT_EQ(norm(E::scalar(h, 1)), 1);
  EXPECT_EQ(char_poly(basis(h, 1)), (QuadraticClass<Rational>{0, 1}));
  EXPECT_EQ(char_poly(E::scalar(h, 3)), (QuadraticClass<Rational>{6, 9}));
  auto split = split_quaternions<Rational>();
  const E x = basis(split, 1) + basis(split, 2);
  EXPECT_EQ(trace(x), 0);
  EXPECT_EQ(norm(x), 0);
  try {
    inverse(x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
  }
}

TEST(TraceNorm, MuFormBaseCase) {
  // norm(alpha + beta l) = alpha^2 + alpha beta - mu beta^2
  auto p = make_params<Rational>(Form::Mu, Rational(3, 2), {}, 1);
  const E x(p, {2, 5});
  EXPECT_EQ(norm(x), Rational(4 + 10) - Rational(3, 2) * 25);
  EXPECT_EQ(trace(x), 2 * 2 + 5);
}

TEST(Inverse, Examples) {
  auto h = main_sequence<Rational>(2);
  EXPECT_EQ(inverse(E::scalar(h, 1)), E::scalar(h, 1));
  EXPECT_EQ(inverse(basis(h, 1)), -basis(h, 1));
}

TEST(LocallyComplex, ReImAbs) {
  auto c = main_sequence<double>(1);
  const Element<double> z(c, {3.0, 4.0});
  EXPECT_DOUBLE_EQ(abs(z), 5.0);
  auto h = main_sequence<Rational>(2);
  EXPECT_EQ(re(E::scalar(h, 1)), 1);
  EXPECT_TRUE(im(E::scalar(h, 1)).is_zero());
  EXPECT_DOUBLE_EQ(abs(E::scalar(h, 1)), 1.0);
  try {
    re(basis(split_quaternions<Rational>(), 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotLocallyComplex);
  }
}

TEST(Alternativity, BasisAndPairs) {
  Rng rng(5);
  for (int level = 1; level <= 5; ++level) {
    auto p = random_params(level, rng);
    for (std::size_t m = 0; m < p->dim(); ++m) EXPECT_TRUE(is_alternative(basis(p, m))) << level << " " << m;
    for (std::size_t k = 0; 2 * k + 1 < p->dim(); ++k) {
      const E pair = E::basis(p, 2 * k, cdpoly::testing::small_rational(rng)) +
                     E::basis(p, 2 * k + 1, cdpoly::testing::small_rational(rng));
      EXPECT_TRUE(is_alternative(pair)) << level << " " << k;
    }
  }
}

TEST(Alternativity, DenseSedenionWitness) {
  auto s = main_sequence<Rational>(4);
  // e1 + e2 + e9 fails a(ab) = (aa)b at b = e4.
  const E a = basis(s, 1) + basis(s, 2) + basis(s, 9);
  EXPECT_FALSE(is_alternative(a));
  const E b = basis(s, 4);
  EXPECT_NE(a * (a * b), (a * a) * b);
}

TEST(Alternativity, AgreesWithRandomProbes) {
  Rng rng(9);
  for (int level = 2; level <= 5; ++level) {
    auto p = main_sequence<Rational>(level);
    for (int trial = 0; trial < 4; ++trial) {
      const E a = trial % 2 == 0 ? random_element(p, rng) : E::basis(p, 1, 2) + E::basis(p, 2, 3);
      bool probes = true;
      for (int j = 0; j < 100 && probes; ++j) {
        const E b = random_element(p, rng);
        probes = a * (a * b) == (a * a) * b && (b * a) * a == b * (a * a);
      }
      EXPECT_EQ(is_alternative(a), probes) << "level " << level;
    }
  }
}

TEST(QuadraticEquivalence, ConjugateAndRealImagForm) {
  Rng rng(3);
  auto o = main_sequence<Rational>(3);
  for (int t = 0; t < 20; ++t) {
    const E a = random_element(o, rng);
    EXPECT_TRUE(quadratically_equivalent(a, conj(a)));
    EXPECT_TRUE(quadratically_equivalent(a, a));
  }
  auto od = main_sequence<double>(3);
  const Element<double> x(od, {1, 0.6, 0, 0, 0.8, 0, 0, 0});
  const Element<double> y(od, {1, 0, 0, 0, 0, 0, 1, 0});
  EXPECT_TRUE(quadratically_equivalent(x, y, 1e-12));
  EXPECT_DOUBLE_EQ(re(x), re(y));
  EXPECT_NEAR(abs(im(x)), abs(im(y)), 1e-15);
}

// Laws over random construction data, levels 1..5, exact.
class Laws : public ::testing::TestWithParam<int> {};

TEST_P(Laws, RandomElements) {
  const int level = GetParam();
  Rng rng(100 + level);
  for (int trial = 0; trial < 12; ++trial) {
    auto p = random_params(level, rng);
    const E x = random_element(p, rng), y = random_element(p, rng);
    EXPECT_EQ((x * y) * x, x * (y * x)) << "flexible";
    EXPECT_EQ((x * x) * x, x * (x * x)) << "power associative";
    EXPECT_EQ(((x * x) * x) * x, (x * x) * (x * x)) << "power associative";
    EXPECT_EQ(conj(x * y), conj(y) * conj(x)) << "anti-automorphism";
    EXPECT_EQ(conj(conj(x)), x);
    EXPECT_EQ(trace(x), trace_direct(x));
    EXPECT_EQ(norm(x), norm_direct(x));
    EXPECT_EQ(norm(x), norm_by_weights(x));
    const auto q = char_poly(x);
    EXPECT_TRUE((x * x - x * q.trace + E::scalar(p, q.norm)).is_zero()) << "characteristic identity";
    const E z = random_element(p, rng);
    const Rational lhs = inner_product(x, y * z);
    EXPECT_EQ(lhs, inner_product(x * conj(z), y)) << "moving c across";
    EXPECT_EQ(lhs, inner_product(conj(y) * x, z)) << "moving b across";
    if (sgn(norm(x)) != 0) {
      EXPECT_EQ(x * inverse(x), E::scalar(p, 1));
      EXPECT_EQ(inverse(x) * x, E::scalar(p, 1));
    }
  }
}

TEST_P(Laws, MainSequence) {
  const int level = GetParam();
  Rng rng(200 + level);
  auto p = main_sequence<Rational>(level);
  for (int trial = 0; trial < 12; ++trial) {
    const E x = random_element(p, rng), y = random_element(p, rng);
    if (!x.is_zero()) EXPECT_GT(norm(x), 0) << "anisotropic";
    if (level <= 3) EXPECT_EQ(norm(x * y), norm(x) * norm(y)) << "composition";
    EXPECT_EQ(re(x) * 2, trace(x));
    EXPECT_EQ(trace(im(x)), 0);
    EXPECT_NEAR(abs(x) * abs(x), norm(x).get_d(), 1e-9 * (1 + norm(x).get_d()));
  }
}

INSTANTIATE_TEST_SUITE_P(Levels, Laws, ::testing::Range(1, 6));

TEST(FloatBackend, AgreesWithExact) {
  Rng rng(77);
  auto p = main_sequence<Rational>(4);
  auto pd = to_double(*p);
  for (int t = 0; t < 10; ++t) {
    const E x = random_element(p, rng), y = random_element(p, rng);
    const Element<double> xd = to_double(x, pd), yd = to_double(y, pd);
    const Element<double> prod = to_double(x * y, pd);
    EXPECT_TRUE((xd * yd - prod).is_zero(1e-12));
    EXPECT_NEAR(norm(xd), norm(x).get_d(), 1e-12);
    EXPECT_NEAR(norm_direct(xd), norm(xd), 1e-12);
  }
}
