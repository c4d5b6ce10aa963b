// cdpoly: command-line front end.
//
//   cdpoly eval --poly f.json --at a.json
//   cdpoly spherical --poly f.json [--candidates c.json]
//   cdpoly bounds|rho|glucas|jensen --poly f.json
//   cdpoly snail --poly f.json [--slices K] [--seed S] [--svg out.svg] [--csv out.csv]
//   cdpoly verify --suite paper
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 semantic error,
// 4 I/O error.  CDPOLY_TOL overrides the default tolerance; --tol overrides both.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdpoly/document.hpp"
#include "cdpoly/geometry.hpp"
#include "cdpoly/snail_render.hpp"
#include "cdpoly/verify.hpp"

using namespace cdpoly;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kSemantic = 3, kIo = 4 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
      return kParse;
    case ErrorCode::Io:
      return kIo;
    default:
      return kSemantic;
  }
}

double default_tol() {
  const char* env = std::getenv("CDPOLY_TOL");
  if (!env || !*env) return kDefaultTol;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0) || !std::isfinite(v))
    throw Error(ErrorCode::Parse, std::string("CDPOLY_TOL is not a positive number: ") + env);
  return v;
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
json element_json(const Element<S>& a) {
  json v = json::array();
  for (const auto& x : a.coeffs()) v.push_back(scalar_json(x));
  return v;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json complex_list(const std::vector<Complex>& zs) {
  json out = json::array();
  for (Complex z : zs) out.push_back(complex_json(z));
  return out;
}

Polynomial<double> load_double(const std::string& path) {
  return std::visit([](const auto& f) { return as_double(f); }, parse_polynomial(read_file(path)));
}

// ---------------------------------------------------------------- eval

template <Scalar S>
json eval_report(const Polynomial<S>& f, const Element<S>& a, double tol) {
  require_same_params(f.params(), a.params());
  json out;
  out["value"] = element_json(eval(f, a));
  try {
    out["companion_value"] = element_json(eval(companion(f, tol), a));
  } catch (const Error&) {
    out["companion_value"] = nullptr;
  }
  return out;
}

json cmd_eval(const std::string& poly, const std::string& at, double tol) {
  const AnyPolynomial f = parse_polynomial(read_file(poly));
  const AnyElement a = parse_element(read_file(at));
  if (mode_of(f) == ScalarMode::Rational && mode_of(a) == ScalarMode::Rational)
    return eval_report(std::get<0>(f), std::get<0>(a), tol);
  const Polynomial<double> fd = std::visit([](const auto& g) { return as_double(g); }, f);
  const Element<double> ad = std::visit(
      [&fd](const auto& e) {
        if constexpr (std::is_same_v<std::decay_t<decltype(e)>, Element<double>>) {
          return e;
        } else {
          return to_double(e, fd.params_ptr());
        }
      },
      a);
  return eval_report(fd, ad, tol);
}

// ---------------------------------------------------------------- spherical

template <Scalar S>
json spherical_report(const Polynomial<S>& f, const std::optional<CandidateList>& cands, double tol) {
  SphericalOptions<S> opts;
  opts.tol = tol;
  if (cands) {
    std::vector<QuadraticClass<S>> q;
    for (const auto& c : cands->classes) {
      if constexpr (is_exact_v<S>) {
        q.push_back(c);
      } else {
        q.push_back({c.trace.get_d(), c.norm.get_d()});
      }
    }
    opts.candidates = std::move(q);
    for (const auto& r : cands->central_roots) {
      if constexpr (is_exact_v<S>) {
        opts.central_candidates.push_back(r);
      } else {
        opts.central_candidates.push_back(r.get_d());
      }
    }
  }
  const auto r = spherical_classes(f, opts);
  json out;
  out["classes"] = json::array();
  for (const auto& c : r.classes)
    out["classes"].push_back({{"trace", scalar_json(c.cls.trace)}, {"norm", scalar_json(c.cls.norm)}, {"multiplicity", c.multiplicity}});
  out["central_roots"] = json::array();
  for (const auto& c : r.central_roots) out["central_roots"].push_back(scalar_json(c));
  out["deflated"] = json::array();
  for (const auto& c : r.deflated.coeffs()) out["deflated"].push_back(element_json(c));
  return out;
}

json cmd_spherical(const std::string& poly, const std::string& candidates, double tol) {
  const AnyPolynomial f = parse_polynomial(read_file(poly));
  std::optional<CandidateList> cands;
  if (!candidates.empty()) cands = parse_candidates(read_file(candidates));
  return std::visit([&](const auto& g) { return spherical_report(g, cands, tol); }, f);
}

// ---------------------------------------------------------------- bounds, rho

json cmd_bounds(const std::string& poly, double tol) {
  const Bounds b = bounds(load_double(poly), tol);
  return {{"monic", b.monic}, {"r1", b.r1}, {"r2", b.r2}, {"r3", b.r3}};
}

json cmd_rho(const std::string& poly, double tol) {
  const RhoEstimate r = rho_estimate(load_double(poly), tol);
  return {{"rho", r.rho}, {"partial", r.partial}};
}

// ---------------------------------------------------------------- glucas

json cmd_glucas(const std::string& poly, double tol) {
  const Polynomial<double> f = load_double(poly);
  const auto gl = gauss_lucas_spherical_check(f, tol);
  json out;
  out["division_algebra"] = f.params().is_division_algebra();
  out["companion_roots"] = complex_list(gl.companion_roots);
  out["hull"] = complex_list(gl.hull);
  out["spherical_critical_classes"] = json::array();
  for (const auto& c : gl.classes)
    out["spherical_critical_classes"].push_back({{"trace", c.cls.trace},
                                                 {"norm", c.cls.norm},
                                                 {"point", complex_json(c.point)},
                                                 {"verdict", std::string(to_string(c.verdict))}});
  bool pass = gl.pass;
  out["critical_points"] = json::array();
  if (f.params().is_division_algebra() && f.degree() >= 2) {
    SphericalOptions<double> opts;
    opts.tol = tol;
    const auto cat = find_roots(derivative(f), opts);
    std::vector<Element<double>> points = cat.isolated;
    for (double c : cat.central) points.push_back(Element<double>::scalar(f.params_ptr(), c));
    for (const auto& p : points) {
      const auto m = in_snail(f, p, tol);
      pass = pass && m.verdict != HullVerdict::Outside;
      out["critical_points"].push_back(
          {{"point", element_json(p)}, {"slice_point", complex_json(m.point)}, {"verdict", std::string(to_string(m.verdict))}});
    }
    if (f.degree() == 2) {
      const auto q = gauss_lucas_quadratic_check(f, tol);
      out["quadratic"] = {{"critical_point", element_json(q.critical_point)}, {"verdict", std::string(to_string(q.verdict))}};
      pass = pass && q.verdict != HullVerdict::Outside;
    }
  }
  out["pass"] = pass;
  return out;
}

// ---------------------------------------------------------------- jensen

json jensen_json(const JensenReport& r) {
  json out;
  out["spheres"] = json::array();
  for (const auto& s : r.spheres) out["spheres"].push_back({{"center", s.center}, {"radius", s.radius}});
  out["classes"] = json::array();
  for (const auto& c : r.classes) {
    json cj = {{"trace", c.cls.trace}, {"norm", c.cls.norm}};
    cj["sphere"] = c.sphere ? json(*c.sphere) : json(nullptr);
    out["classes"].push_back(cj);
  }
  out["pass"] = r.pass;
  return out;
}

json cmd_jensen(const std::string& poly, double tol) {
  const Polynomial<double> f = load_double(poly);
  json out;
  const bool real = f.has_central_coeffs(tol);
  out["real_coefficients"] = real;
  bool pass = true;
  if (real) {
    const auto r = jensen_check(f, tol);
    out["roots"] = jensen_json(r);
    pass = r.pass;
  }
  const auto rc = jensen_check_companion(f, tol);
  out["companion"] = jensen_json(rc);
  out["pass"] = pass && rc.pass;
  return out;
}

// ---------------------------------------------------------------- snail

std::vector<Complex> critical_markers(const Polynomial<double>& f, double tol) {
  std::vector<Complex> out;
  if (f.degree() < 2) return out;
  SphericalOptions<double> opts;
  opts.tol = tol;
  const Polynomial<double> df = derivative(f);
  const auto classes = spherical_classes(df, opts);
  for (const auto& c : classes.classes) {
    const double x = c.cls.trace / 2, y = std::sqrt(std::max(0.0, c.cls.norm - x * x));
    out.push_back({x, y});
    out.push_back({x, -y});
  }
  for (double r : classes.central_roots) out.push_back({r, 0.0});
  if (f.params().is_division_algebra()) {
    for (const auto& r : find_roots(df, opts).isolated) out.push_back(SliceDirection::through(r, tol).project(r));
  }
  return out;
}

void write_to(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  body(out);
  out.flush();
  if (!out) throw Error(ErrorCode::Io, "write to " + path + " failed");
}

json cmd_snail(const std::string& poly, int slices, std::uint64_t seed, const std::string& svg, const std::string& csv,
               double tol) {
  const Polynomial<double> f = load_double(poly);
  SnailPlot plot;
  plot.slices = snail_sample(f, slices, seed);
  if (f.degree() >= 1 && f.is_monic(tol)) plot.radius = bounds(f, tol).r3;
  plot.critical = critical_markers(f, tol);

  if (!csv.empty()) write_to(csv, [&](std::ostream& os) { write_snail_csv(os, plot.slices); });
  if (!svg.empty()) write_to(svg, [&](std::ostream& os) { write_snail_svg(os, plot); });

  std::size_t vertices = 0;
  double reach = 0;
  for (const auto& s : plot.slices) {
    vertices += s.hull.size();
    for (Complex v : s.hull) reach = std::max(reach, std::abs(v));
  }
  json out;
  out["slices"] = plot.slices.size();
  out["seed"] = seed;
  out["hull_vertices"] = vertices;
  out["max_vertex_modulus"] = reach;
  out["r3"] = plot.radius ? json(*plot.radius) : json(nullptr);
  out["critical_points"] = complex_list(plot.critical);
  return out;
}

// ---------------------------------------------------------------- verify

int cmd_verify() {
  const auto results = run_worked_examples();
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << '\n';
    failed += r.pass ? 0 : 1;
  }
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " passed\n";
  return failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polynomials over Cayley-Dickson algebras"};
  app.require_subcommand(1);

  std::string poly, at, candidates, svg, csv, suite = "paper";
  double tol = 0;
  int slices = 0;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--poly", poly, "polynomial document (JSON)")->required();
    sub->add_option("--tol", tol, "tolerance (default 1e-9, or CDPOLY_TOL)")->check(CLI::PositiveNumber);
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate f at an element");
  add_common(eval_cmd);
  eval_cmd->add_option("--at", at, "element document (JSON)")->required();

  auto* sph = app.add_subcommand("spherical", "spherical root classes");
  add_common(sph);
  sph->add_option("--candidates", candidates, "exact (T, N) candidates (JSON)");

  auto* bnd = app.add_subcommand("bounds", "root bounds R1, R2, R3");
  add_common(bnd);
  auto* rho = app.add_subcommand("rho", "spectral radius");
  add_common(rho);
  auto* gl = app.add_subcommand("glucas", "critical points against the companion root hull");
  add_common(gl);
  auto* jen = app.add_subcommand("jensen", "spherical critical classes against Jensen spheres");
  add_common(jen);

  auto* sn = app.add_subcommand("snail", "sample slices of the snail");
  add_common(sn);
  sn->add_option("--slices", slices, "number of slices (0: default for the level)")->check(CLI::NonNegativeNumber);
  sn->add_option("--seed", seed, "sampling seed");
  sn->add_option("--svg", svg, "SVG output path");
  sn->add_option("--csv", csv, "CSV output path");

  auto* ver = app.add_subcommand("verify", "replay the worked examples");
  ver->add_option("--suite", suite, "suite name")->check(CLI::IsMember({"paper"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (tol == 0) tol = default_tol();
    json out;
    if (*eval_cmd) {
      out = cmd_eval(poly, at, tol);
    } else if (*sph) {
      out = cmd_spherical(poly, candidates, tol);
    } else if (*bnd) {
      out = cmd_bounds(poly, tol);
    } else if (*rho) {
      out = cmd_rho(poly, tol);
    } else if (*gl) {
      out = cmd_glucas(poly, tol);
    } else if (*jen) {
      out = cmd_jensen(poly, tol);
    } else if (*sn) {
      out = cmd_snail(poly, slices, seed, svg, csv, tol);
    } else if (*ver) {
      return cmd_verify();
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
  } catch (const Error& e) {
    std::cerr << "cdpoly: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "cdpoly: " << e.what() << '\n';
    return kSemantic;
  }
}
