#ifndef RBLOCK_SVG_HPP
#define RBLOCK_SVG_HPP

#include <iosfwd>
#include <string>

#include "rblock/tiling.hpp"

namespace rblock {

// Standalone SVG drawing of one tiling: light lattice lines, black lozenge
// outlines, shaded negative lozenges, hatched dent triangles.  Output is
// byte-deterministic for a fixed tiling and region.
void emit_svg(const Tiling& tiling, const TriangleSet& region, std::ostream& out);
void emit_svg_file(const Tiling& tiling, const TriangleSet& region,
                   const std::string& path);

} // namespace rblock

#endif
