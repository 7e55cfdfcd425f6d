#include "rslab/svg_render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rslab {

namespace {

struct Layout {
    int scale;
    int margin;

    int x(int c) const { return margin + (c - 1) * scale; }
    int y(int r) const { return margin + (r - 1) * scale; }
};

void line(std::ostringstream& out, int x1, int y1, int x2, int y2, const std::string& color,
          int width) {
    out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\" stroke=\"" << color << "\" stroke-width=\"" << width
        << "\" stroke-linecap=\"round\"/>\n";
}

// tip of a stub, half a unit outward from its vertex
std::pair<int, int> stub_tip(const Layout& lo, const Stub& s) {
    const int x = lo.x(s.c), y = lo.y(s.r);
    const int h = lo.scale / 2;
    switch (s.side) {
        case Side::Up: return {x, y - h};
        case Side::Down: return {x, y + h};
        case Side::Left: return {x - h, y};
        case Side::Right: return {x + h, y};
    }
    return {x, y};
}

} // namespace

std::string render_fpl_svg(const Fpl& f, const RenderSpec& spec,
                           const std::vector<Edge>* highlight) {
    if (spec.scale <= 0) throw std::invalid_argument("render: scale must be positive");
    if (spec.path_color == spec.converse_color)
        throw std::invalid_argument("render: path and converse colors must differ");

    const int n = f.n();
    const GridGeometry geom(n);
    const Layout lo{spec.scale, spec.scale};
    const int size = 2 * lo.margin + (n - 1) * spec.scale;
    const int thick = std::max(2, spec.scale / 12);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "  <rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";

    // interior edges
    for (int idx = 0; idx < geom.edge_count(); ++idx) {
        const Edge e = geom.edge_at(idx);
        const std::string& color = f.edges().test(idx) ? spec.path_color : spec.converse_color;
        const int x1 = lo.x(e.c), y1 = lo.y(e.r);
        const int x2 = e.horizontal ? lo.x(e.c + 1) : x1;
        const int y2 = e.horizontal ? y1 : lo.y(e.r + 1);
        line(out, x1, y1, x2, y2, color, thick);
    }

    // occupied stubs, in label order
    for (const Stub& s : geom.labels()) {
        const auto [tx, ty] = stub_tip(lo, s);
        line(out, lo.x(s.c), lo.y(s.r), tx, ty, spec.path_color, thick);
    }

    // highlighted alternating cycle on top
    if (highlight) {
        for (const Edge& e : *highlight) {
            const int idx = geom.index_of(e); // validates the edge
            (void)idx;
            const int x1 = lo.x(e.c), y1 = lo.y(e.r);
            const int x2 = e.horizontal ? lo.x(e.c + 1) : x1;
            const int y2 = e.horizontal ? y1 : lo.y(e.r + 1);
            line(out, x1, y1, x2, y2, spec.highlight_color, std::max(1, thick / 2));
        }
    }

    if (spec.labels) {
        const int fs = std::max(8, spec.scale / 3);
        int l = 0;
        for (const Stub& s : geom.labels()) {
            ++l;
            auto [tx, ty] = stub_tip(lo, s);
            // nudge the text away from the stub tip
            switch (s.side) {
                case Side::Up: ty -= fs / 2; break;
                case Side::Down: ty += fs; break;
                case Side::Left: tx -= fs; break;
                case Side::Right: tx += fs / 2; break;
            }
            out << "  <text x=\"" << tx << "\" y=\"" << ty << "\" font-size=\"" << fs
                << "\" font-family=\"sans-serif\" text-anchor=\"middle\" fill=\"black\">" << l
                << "</text>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace rslab
