#include "cdpoly/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cdpoly {

using Point = std::complex<double>;

namespace {

double cross(Point o, Point a, Point b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

std::string_view to_string(HullVerdict v) {
  switch (v) {
    case HullVerdict::Inside:
      return "inside";
    case HullVerdict::Boundary:
      return "boundary";
    case HullVerdict::Outside:
      return "outside";
  }
  return "outside";
}

std::vector<Point> convex_hull_2d(std::vector<Point> points) {
  std::sort(points.begin(), points.end(), [](Point a, Point b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;

  double extent = 0;
  for (const Point& p : points) extent = std::max(extent, std::abs(p - points.front()));
  // Turns smaller than this (relative to the point spread) count as straight.
  const double flat = 64 * std::numeric_limits<double>::epsilon() * extent * extent;

  std::vector<Point> hull(2 * points.size());
  std::size_t k = 0;
  for (const Point& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= flat) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= flat) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  if (hull.size() < 2) {
    // Everything collinear: keep the two extremes.
    return {points.front(), points.back()};
  }
  return hull;
}

double hull_diameter(std::span<const Point> hull) {
  double d = 0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j) d = std::max(d, std::abs(hull[i] - hull[j]));
  return d;
}

HullVerdict point_in_hull(Point p, std::span<const Point> hull, double tol, HullTopology topology) {
  if (hull.empty()) return HullVerdict::Outside;
  const double band = tol * (1.0 + hull_diameter(hull));
  if (hull.size() == 1) return std::abs(p - hull[0]) <= band ? HullVerdict::Boundary : HullVerdict::Outside;
  if (hull.size() == 2) {
    if (segment_distance(p, hull[0], hull[1]) > band) return HullVerdict::Outside;
    if (topology == HullTopology::Relative && std::abs(p - hull[0]) > band && std::abs(p - hull[1]) > band)
      return HullVerdict::Inside;
    return HullVerdict::Boundary;
  }
  double min_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point a = hull[i], b = hull[(i + 1) % hull.size()];
    const double signed_dist = cross(a, b, p) / std::abs(b - a);
    min_dist = std::min(min_dist, signed_dist);
  }
  if (min_dist < -band) return HullVerdict::Outside;
  return min_dist > band ? HullVerdict::Inside : HullVerdict::Boundary;
}

}  // namespace cdpoly
