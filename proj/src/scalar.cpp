#include "cdpoly/scalar.hpp"

#include <cctype>
#include <cmath>

#include "cdpoly/error.hpp"

namespace cdpoly {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroGamma: return "ZeroGamma";
    case ErrorCode::DegenerateMu: return "DegenerateMu";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::ParamsMismatch: return "ParamsMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotLocallyComplex: return "NotLocallyComplex";
    case ErrorCode::NonCentralResult: return "NonCentralResult";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotDivisionAlgebra: return "NotDivisionAlgebra";
    case ErrorCode::DegreeZero: return "DegreeZero";
    case ErrorCode::NonMonicHighLevel: return "NonMonicHighLevel";
    case ErrorCode::NonRealCoefficients: return "NonRealCoefficients";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorCode::Parse, "malformed rational '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  std::int64_t exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class ez = parse_integer(s.substr(e + 1), text);
    if (!ez.fits_slong_p() || std::abs(ez.get_si()) > 4096)
      throw Error(ErrorCode::Parse, "exponent out of range in '" + std::string(text) + "'");
    exponent = ez.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  auto dot = s.find('.');
  if (dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
      throw Error(ErrorCode::Parse, "malformed decimal '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<std::int64_t>(fp.size());
  } else {
    if (!all_digits(s)) throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
    digits = std::string(s);
  }
  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  Rational q = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
      throw Error(ErrorCode::Parse, "signed denominator in '" + std::string(text) + "'");
    mpz_class den = parse_integer(den_text, text);
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  return parse_decimal(text);
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

std::optional<Rational> rationalize(double x, std::int64_t max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Beyond 2^53 every double is an integer already.
  if (std::fabs(x) >= 9.0e15) return Rational(x);
  // Convergents h/k of the continued fraction of x.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
  mpz_class k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int depth = 0; depth < 64; ++depth) {
    Rational candidate(h, k);
    if (std::fabs(candidate.get_d() - x) <= tol) {
      candidate.canonicalize();
      return candidate;
    }
    if (frac < 1e-300) break;
    double inv = 1.0 / frac;
    double a = std::floor(inv);
    frac = inv - a;
    if (a > 9.0e15) break;
    mpz_class az(static_cast<long>(a));
    mpz_class h_next = az * h + h_prev;
    mpz_class k_next = az * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

}  // namespace cdpoly
