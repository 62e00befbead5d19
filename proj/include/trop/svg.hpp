#pragma once

// Deterministic SVG rendering of plane tropical curves: vertices, bounded
// edges and rays (clipped at a configurable box), stable-intersection
// markers, and an optional dual-subdivision overlay.

#include "trop/cayley.hpp"

#include <array>

namespace trop {

struct SvgOptions {
  std::optional<std::array<Rat, 4>> bbox; // x0, y0, x1, y1
  bool show_dual = false;
};

// Byte-identical output for identical inputs and options; n = 2 only.
std::string emit_svg(const TropicalSystem& sys, const SvgOptions& opts = {});

} // namespace trop
