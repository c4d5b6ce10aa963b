#include "cdpoly/snail_render.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

namespace cdpoly {

void write_snail_csv(std::ostream& out, const std::vector<SnailSlice>& slices) {
  const std::size_t dim = slices.empty() ? 0 : slices.front().direction.unit().dim();
  out << "slice_index";
  for (std::size_t m = 0; m < dim; ++m) out << ",I_" << m;
  out << ",vertex_index,re,im_along_I\n";
  out << std::setprecision(17);
  for (std::size_t s = 0; s < slices.size(); ++s) {
    const auto& I = slices[s].direction.unit();
    for (std::size_t v = 0; v < slices[s].hull.size(); ++v) {
      out << s;
      for (double c : I.coeffs()) out << ',' << c;
      out << ',' << v << ',' << slices[s].hull[v].real() << ',' << slices[s].hull[v].imag() << '\n';
    }
  }
}

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 24.0;

struct Frame {
  double extent;

  double x(double re) const { return kCanvas / 2 + re / extent * (kCanvas / 2 - kMargin); }
  double y(double im) const { return kCanvas / 2 - im / extent * (kCanvas / 2 - kMargin); }
  double len(double r) const { return r / extent * (kCanvas / 2 - kMargin); }
};

}  // namespace

void write_snail_svg(std::ostream& out, const SnailPlot& plot) {
  double extent = 0;
  for (const auto& s : plot.slices)
    for (const Complex& v : s.hull) extent = std::max(extent, std::abs(v));
  for (const Complex& c : plot.critical) extent = std::max(extent, std::abs(c));
  if (plot.radius) extent = std::max(extent, *plot.radius);
  if (!(extent > 0) || !std::isfinite(extent)) extent = 1;
  extent *= 1.05;
  const Frame f{extent};

  out << std::setprecision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n"
      << "<line x1=\"0\" y1=\"" << f.y(0) << "\" x2=\"" << kCanvas << "\" y2=\"" << f.y(0) << "\"/>\n"
      << "<line x1=\"" << f.x(0) << "\" y1=\"0\" x2=\"" << f.x(0) << "\" y2=\"" << kCanvas << "\"/>\n"
      << "</g>\n";
  if (plot.radius)
    out << "<circle cx=\"" << f.x(0) << "\" cy=\"" << f.y(0) << "\" r=\"" << f.len(*plot.radius)
        << "\" fill=\"none\" stroke=\"#444444\" stroke-dasharray=\"6 4\"/>\n";

  out << "<g fill=\"#1f77b4\" fill-opacity=\"0.06\" stroke=\"#1f77b4\" stroke-opacity=\"0.5\" stroke-width=\"1\">\n";
  for (const auto& s : plot.slices) {
    const auto& h = s.hull;
    if (h.size() >= 3) {
      out << "<polygon points=\"";
      for (const Complex& v : h) out << f.x(v.real()) << ',' << f.y(v.imag()) << ' ';
      out << "\"/>\n";
    } else if (h.size() == 2) {
      out << "<line x1=\"" << f.x(h[0].real()) << "\" y1=\"" << f.y(h[0].imag()) << "\" x2=\"" << f.x(h[1].real())
          << "\" y2=\"" << f.y(h[1].imag()) << "\"/>\n";
    } else if (h.size() == 1) {
      out << "<circle cx=\"" << f.x(h[0].real()) << "\" cy=\"" << f.y(h[0].imag()) << "\" r=\"2\"/>\n";
    }
  }
  out << "</g>\n";

  out << "<g stroke=\"#d62728\" stroke-width=\"2\">\n";
  for (const Complex& c : plot.critical) {
    const double cx = f.x(c.real()), cy = f.y(c.imag());
    out << "<line x1=\"" << cx - 4 << "\" y1=\"" << cy - 4 << "\" x2=\"" << cx + 4 << "\" y2=\"" << cy + 4 << "\"/>"
        << "<line x1=\"" << cx - 4 << "\" y1=\"" << cy + 4 << "\" x2=\"" << cx + 4 << "\" y2=\"" << cy - 4 << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace cdpoly
