#pragma once

#include <string>

#include "pickqubo/decode.hpp"
#include "pickqubo/instance.hpp"

namespace pickqubo {

/// SVG 1.1 drawing of the solution: depot in yellow, products in blue, one coloured
/// polyline per robot that leaves the depot (red, blue, yellow, then the rest of the palette).
/// Output bytes depend only on the inputs.
std::string render_svg(const Solution& solution, const Instance& instance);

}  // namespace pickqubo
