#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace cdpoly {

enum class HullVerdict { Inside, Boundary, Outside };

/// How degenerate hulls are read.  Planar treats a segment as having no
/// interior.  Relative uses the relative interior, so points strictly between
/// the endpoints of a segment are inside.
enum class HullTopology { Planar, Relative };

std::string_view to_string(HullVerdict v);

/// Monotone chain.  Counterclockwise, starting from the lowest-leftmost
/// point, with collinear points dropped.  A single point or a segment comes
/// back as one or two vertices.
std::vector<std::complex<double>> convex_hull_2d(std::vector<std::complex<double>> points);

double hull_diameter(std::span<const std::complex<double>> hull);

/// Signed-distance membership with a boundary band of tol * (1 + diameter).
/// An empty hull contains nothing.
HullVerdict point_in_hull(std::complex<double> p, std::span<const std::complex<double>> hull, double tol,
                          HullTopology topology = HullTopology::Planar);

}  // namespace cdpoly
