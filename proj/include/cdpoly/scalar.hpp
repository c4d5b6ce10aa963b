#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cdpoly {

/// Arbitrary-precision rational, the exact backend.
using Rational = mpq_class;

inline constexpr double kDefaultTol = 1e-9;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr std::string_view name = "rational";
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr std::string_view name = "float64";
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::exact; };

template <Scalar S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

template <Scalar S>
S from_int(long v) {
  return S(v);
}

/// Exact conversion of a binary double into the target backend.
template <Scalar S>
S from_double(double x);

template <>
inline double from_double<double>(double x) {
  return x;
}

template <>
inline Rational from_double<Rational>(double x) {
  return Rational(x);
}

/// Zero test: exact equality for rationals, |x| <= tol for floats.
inline bool near_zero(const Rational& q, double /*tol*/) { return sgn(q) == 0; }
inline bool near_zero(double x, double tol) { return std::fabs(x) <= tol; }

template <Scalar S>
bool near_equal(const S& a, const S& b, double tol) {
  return near_zero(S(a - b), tol);
}

inline double magnitude(const Rational& q) { return std::fabs(q.get_d()); }
inline double magnitude(double x) { return std::fabs(x); }

/// Parses "p", "p/q", "-p/q" or a plain decimal ("1.25", "-3e-2") exactly.
/// Throws Error(Parse) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string format_rational(const Rational& q);

/// Continued-fraction rationalization: returns the first convergent of x
/// within `tol` of x whose denominator does not exceed `max_den`.
std::optional<Rational> rationalize(double x, std::int64_t max_den, double tol);

}  // namespace cdpoly
