// Static SVG rendering of a braided scene: punctures, diameter, supports,
// basepoints and labelled intersection markers.

#pragma once

#include <string>

#include "knotint/curves.hpp"

namespace knotint {

std::string render_svg(const Scene& s, int N);

}  // namespace knotint
