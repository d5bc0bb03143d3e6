#pragma once

#include <optional>
#include <string>

#include "foldlab/engine.hpp"
#include "foldlab/grid.hpp"

namespace foldlab {

// Character diagram: face digits per cell (or '.' without a facemapping), hole
// outlines and the outer boundary drawn with +,-,|.
std::string render_ascii(const Polyomino& p, const std::optional<Facemapping>& fm);

// SVG in the style of the figures: light grid, heavy hole outlines, face digits.
std::string render_svg(const Polyomino& p, const std::optional<Facemapping>& fm);

}  // namespace foldlab
