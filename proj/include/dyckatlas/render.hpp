#pragma once

#include <string>

#include "dyckatlas/tiling.hpp"

namespace dyck {

// Character-art view on the rotated (diamond) grid: both boundary paths as
// slashes, one letter per tile repeated in each of its boxes.
std::string render_ascii(const DyckTiling& t);

// SVG view: one diamond per box, an outline per tile, the upper path drawn
// thin and the lower path bold; 20 units per lattice step, origin centered.
// Byte-deterministic for a given tiling.
std::string render_svg(const DyckTiling& t);

}  // namespace dyck
