#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "cdpoly/geometry.hpp"

namespace cdpoly {

struct SnailPlot {
  std::vector<SnailSlice> slices;
  /// Critical points in slice coordinates, drawn as crosses.
  std::vector<Complex> critical;
  /// Radius of the bounding circle, if any.
  std::optional<double> radius;
};

/// One row per hull vertex:
///   slice_index,I_0,...,I_{d-1},vertex_index,re,im_along_I
/// Slices whose projection is constant have no hull and no rows.
void write_snail_csv(std::ostream& out, const std::vector<SnailSlice>& slices);

/// Static SVG of all hulls overlaid in one (re, im) plane.
void write_snail_svg(std::ostream& out, const SnailPlot& plot);

}  // namespace cdpoly
