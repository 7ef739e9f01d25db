#pragma once

#include "reptiler/tiling.hpp"

#include <string>

namespace reptiler {

/// SVG 1.1 rendering of a tiling: the region outline plus one closed
/// path per tile. Coordinates become decimals (12 significant digits)
/// for display only; `scale` multiplies model units into user units.
std::string render_svg(const Tiling& t, double scale);

}  // namespace reptiler
