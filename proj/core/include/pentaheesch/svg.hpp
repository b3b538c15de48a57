#pragma once

#include <string>

#include "pentaheesch/corona.hpp"
#include "pentaheesch/solver.hpp"

namespace pentaheesch {

// Deterministic SVG of a patch: the longest edge is drawn 100 units long,
// kernel copies are shaded and each layer is outlined in its own colour.
// Coordinates carry six decimals; y points up in patch space.
std::string render_svg(const Pentagon& p, const Patch& patch);

}  // namespace pentaheesch
