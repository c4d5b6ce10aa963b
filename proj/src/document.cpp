#include "cdpoly/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cdpoly {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const json& member(const json& obj, const char* key) {
  if (!obj.is_object()) fail("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

Rational rational_of(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_number_unsigned()) return Rational(std::to_string(v.get<unsigned long long>()));
  fail("expected a rational string or an integer, got " + v.dump());
}

double double_of(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
  fail("expected a number, got " + v.dump());
}

template <Scalar S>
S scalar_of(const json& v) {
  if constexpr (is_exact_v<S>) {
    return rational_of(v);
  } else {
    return double_of(v);
  }
}

struct Header {
  ScalarMode mode;
  Form form;
  Rational mu;
  std::vector<Rational> gammas;
  int level;
};

Header read_header(const json& doc) {
  Header h{};
  const json& alg = member(doc, "algebra");
  const json& form = member(alg, "form");
  if (form == "mu") {
    h.form = Form::Mu;
  } else if (form == "gamma") {
    h.form = Form::Gamma;
  } else {
    fail("algebra.form must be \"mu\" or \"gamma\"");
  }
  if (h.form == Form::Mu) h.mu = rational_of(member(alg, "mu"));
  const json& gammas = member(alg, "gammas");
  if (!gammas.is_array()) fail("algebra.gammas must be a list");
  for (const json& g : gammas) h.gammas.push_back(rational_of(g));
  const json& level = member(alg, "level");
  if (!level.is_number_integer() || level.get<long long>() < 0 || level.get<long long>() > 12)
    fail("algebra.level must be an integer in 0..12");
  h.level = static_cast<int>(level.get<long long>());

  h.mode = ScalarMode::Rational;
  if (auto it = doc.find("scalar"); it != doc.end()) {
    if (*it == "float64") {
      h.mode = ScalarMode::Float64;
    } else if (*it != "rational") {
      fail("scalar must be \"rational\" or \"float64\"");
    }
  }
  return h;
}

template <Scalar S>
ParamsPtr<S> params_of(const Header& h) {
  if constexpr (is_exact_v<S>) {
    return make_params<Rational>(h.form, h.mu, h.gammas, h.level);
  } else {
    std::vector<double> g;
    for (const auto& q : h.gammas) g.push_back(q.get_d());
    return make_params<double>(h.form, h.mu.get_d(), std::move(g), h.level);
  }
}

template <Scalar S>
Element<S> element_of(const ParamsPtr<S>& p, const json& v) {
  if (!v.is_array()) fail("coefficient vectors must be lists");
  if (v.size() != p->dim())
    fail("coefficient vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(p->dim()));
  std::vector<S> c;
  c.reserve(v.size());
  for (const json& x : v) c.push_back(scalar_of<S>(x));
  return Element<S>(p, std::move(c));
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

template <Scalar S>
Polynomial<S> polynomial_of(const Header& h, const json& doc) {
  auto p = params_of<S>(h);
  const json& coeffs = member(doc, "coeffs");
  if (!coeffs.is_array()) fail("coeffs must be a list");
  std::vector<Element<S>> c;
  for (const json& v : coeffs) c.push_back(element_of<S>(p, v));
  return Polynomial<S>(p, std::move(c));
}

template <Scalar S>
json scalar_json(const S& s) {
  if constexpr (is_exact_v<S>) {
    return format_rational(s);
  } else {
    return s;
  }
}

template <Scalar S>
json algebra_json(const Params<S>& p) {
  json alg;
  alg["form"] = p.form() == Form::Mu ? "mu" : "gamma";
  if (p.form() == Form::Mu) alg["mu"] = format_rational(Rational(p.mu()));
  json g = json::array();
  for (const auto& v : p.gammas()) g.push_back(format_rational(Rational(v)));
  alg["gammas"] = g;
  alg["level"] = p.level();
  return alg;
}

template <Scalar S>
json vector_json(const Element<S>& a) {
  json v = json::array();
  for (const auto& x : a.coeffs()) v.push_back(scalar_json(x));
  return v;
}

}  // namespace

ScalarMode mode_of(const AnyPolynomial& f) { return f.index() == 0 ? ScalarMode::Rational : ScalarMode::Float64; }
ScalarMode mode_of(const AnyElement& a) { return a.index() == 0 ? ScalarMode::Rational : ScalarMode::Float64; }

AnyPolynomial parse_polynomial(std::string_view json_text) {
  const json doc = parse_json(json_text);
  try {
    const Header h = read_header(doc);
    if (h.mode == ScalarMode::Rational) return polynomial_of<Rational>(h, doc);
    return polynomial_of<double>(h, doc);
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

AnyElement parse_element(std::string_view json_text) {
  const json doc = parse_json(json_text);
  try {
    const Header h = read_header(doc);
    if (h.mode == ScalarMode::Rational) return element_of<Rational>(params_of<Rational>(h), member(doc, "element"));
    return element_of<double>(params_of<double>(h), member(doc, "element"));
  } catch (const json::exception& e) {
    fail(e.what());
  }
}

std::string serialize(const AnyPolynomial& f) {
  return std::visit(
      [](const auto& g) {
        using S = std::decay_t<decltype(g.coeffs()[0][0])>;
        json doc;
        doc["algebra"] = algebra_json(g.params());
        doc["scalar"] = std::string(ScalarTraits<S>::name);
        json coeffs = json::array();
        for (const auto& c : g.coeffs()) coeffs.push_back(vector_json(c));
        doc["coeffs"] = coeffs;
        return doc.dump();
      },
      f);
}

std::string serialize(const AnyElement& a) {
  return std::visit(
      [](const auto& e) {
        using S = std::decay_t<decltype(e[0])>;
        json doc;
        doc["algebra"] = algebra_json(e.params());
        doc["scalar"] = std::string(ScalarTraits<S>::name);
        doc["element"] = vector_json(e);
        return doc.dump();
      },
      a);
}

CandidateList parse_candidates(std::string_view json_text) {
  const json doc = parse_json(json_text);
  CandidateList out;
  try {
    if (!doc.is_object()) fail("candidates document must be an object");
    if (auto it = doc.find("classes"); it != doc.end()) {
      if (!it->is_array()) fail("classes must be a list");
      for (const json& c : *it) out.classes.push_back({rational_of(member(c, "trace")), rational_of(member(c, "norm"))});
    }
    if (auto it = doc.find("central_roots"); it != doc.end()) {
      if (!it->is_array()) fail("central_roots must be a list");
      for (const json& r : *it) out.central_roots.push_back(rational_of(r));
    }
  } catch (const json::exception& e) {
    fail(e.what());
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cdpoly
