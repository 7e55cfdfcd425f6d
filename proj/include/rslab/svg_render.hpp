#pragma once

#include <string>
#include <vector>

#include "rslab/fpl.hpp"

namespace rslab {

/// Styling of the FPL diagram: path edges and occupied stubs in path_color,
/// converse (complementary) interior edges in converse_color, optional stub
/// labels, optional highlighted cycle overlay.
struct RenderSpec {
    std::string path_color = "red";
    std::string converse_color = "blue";
    std::string highlight_color = "orange";
    bool labels = true;
    int scale = 40; // pixels per lattice unit
};

/// Deterministic SVG text: identical input and spec give identical bytes.
/// Throws std::invalid_argument when scale <= 0 or the two edge colors
/// coincide.
std::string render_fpl_svg(const Fpl& f, const RenderSpec& spec,
                           const std::vector<Edge>* highlight = nullptr);

} // namespace rslab
