#pragma once

// JSON documents for algebras, polynomials, elements and candidate lists.
//
//   {"algebra": {"form": "gamma", "gammas": ["-1", "-1"], "level": 2},
//    "scalar": "rational",
//    "coeffs": [["0", "1", "0", "0"], ["1", "0", "0", "0"]]}
//
// Coefficient k multiplies x^k.  In rational mode every scalar is a string
// "p", "p/q" or a decimal (integral JSON numbers are also accepted); in
// float64 mode scalars are JSON numbers.  Element documents carry a single
// vector under "element" instead of "coeffs".

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cdpoly/polynomial.hpp"

namespace cdpoly {

enum class ScalarMode { Rational, Float64 };

using AnyPolynomial = std::variant<Polynomial<Rational>, Polynomial<double>>;
using AnyElement = std::variant<Element<Rational>, Element<double>>;

ScalarMode mode_of(const AnyPolynomial& f);
ScalarMode mode_of(const AnyElement& a);

/// All throw Error(Parse) on malformed JSON, unknown keys' values, or
/// coefficient vectors of the wrong length.  Invalid construction data
/// (zero gamma, 4mu+1 = 0) surfaces as the algebra's own error codes.
AnyPolynomial parse_polynomial(std::string_view json_text);
AnyElement parse_element(std::string_view json_text);

std::string serialize(const AnyPolynomial& f);
std::string serialize(const AnyElement& a);

/// {"classes": [{"trace": "0", "norm": "1"}, ...], "central_roots": ["3"]}
/// Scalars follow the rational-string rules in both modes.
struct CandidateList {
  std::vector<QuadraticClass<Rational>> classes;
  std::vector<Rational> central_roots;
};

CandidateList parse_candidates(std::string_view json_text);

/// Reads a whole file; throws Error(Io) if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace cdpoly
