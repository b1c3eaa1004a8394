#pragma once

#include <string>

#include "titsindex/tits_index.hpp"

namespace titsindex {

struct RenderOptions {
  bool ascii_only = false;  // substitute "###" for the triple-edge glyph
};

/// Deterministic one-index text art.  Vertices render as `o`, distinguished
/// vertices as `(o)`; simple edges as `--`, double edges as `=>=`/`=<=` with
/// the arrow toward the short root, triple edges as `≡`.  Fork and branch
/// vertices sit on auxiliary lines above/below the chain at fixed column
/// offsets.  Orbits of size >= 2 are listed on a trailing `orbits:` line,
/// distinguished ones marked `*`.  Throws DomainError on an invalid index.
std::string render_text(const TitsIndex& index, const RenderOptions& options = {});

/// SVG 1.1 document with a fixed integer-coordinate layout per type;
/// distinguished orbits of size >= 2 are enclosed in one oval each.
std::string render_svg(const TitsIndex& index);

/// TikZ fragment (draw/filldraw commands) with the same layout as the SVG.
std::string render_tikz(const TitsIndex& index);

}  // namespace titsindex
