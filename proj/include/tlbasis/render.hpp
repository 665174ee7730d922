#pragma once

#include <string>

#include "tlbasis/noncross.hpp"
#include "tlbasis/tl_core.hpp"

namespace tlbasis {

// n+1 labeled points clockwise on a circle, one filled polygon per block of
// size >= 3 and a chord per 2-block. Output is byte-stable for equal input.
std::string render_svg(const NoncrossingPartition& x);

// The diagram in a rectangle: top points above, bottom points below, one
// chord per pair.
std::string render_svg(const TLDiagram& d);

}  // namespace tlbasis
