#pragma once

#include <string>

#include "colorlink/braid.hpp"
#include "colorlink/ccomplex.hpp"

namespace colorlink {

/// Braid diagram, strands colored by component color, under-strands broken
/// at each crossing. Position 1 is at the bottom.
std::string braid_svg(const ColoredBraid& braid);

/// Spine schematic: one horizontal bar per disk (bottom-to-top), one arc per
/// edge (left-to-right), all arcs left of the bars, each arc labeled with its sign.
std::string spine_svg(const DecoratedSpine& spine);

void render_svg(const ColoredBraid& braid, const DecoratedSpine& spine, const std::string& braid_path,
                const std::string& spine_path);

}  // namespace colorlink
