#pragma once

// Deterministic SVG and ASCII renderers.  Dominos are colored by going
// type (green #2e8b57 for north/east, orange #ff8c00 for south/west);
// matchings draw every graph edge thin and the matched ones bold.

#include "extended.hpp"
#include "steep.hpp"

#include <sstream>
#include <string>

namespace oblique {

namespace detail {

constexpr int kScale = 16;  // svg units per half lattice step (doubled coords)

inline std::string svg_header(int x_min, int y_min, int x_max, int y_max) {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x_min << " " << y_min << " "
       << (x_max - x_min) << " " << (y_max - y_min) << "\">\n";
    return os.str();
}

inline const char* going_fill(Going g) {
    return going_empty_sites(g) ? "#2e8b57" : "#ff8c00";
}

}  // namespace detail

/// One rect per domino; math y points up, svg y down.
inline std::string render_tiling_svg(const TilingWindow& t, bool particle_overlay = false) {
    int A = t.half_width, L = t.word.length();
    int s = detail::kScale;
    std::ostringstream body;
    for (const auto& d : t.dominos) {
        int w = d.horizontal ? 2 : 1;
        int h = d.horizontal ? 1 : 2;
        body << "<rect x=\"" << 2 * s * d.x << "\" y=\"" << -2 * s * (d.y + h) << "\" width=\""
             << 2 * s * w << "\" height=\"" << 2 * s * h << "\" fill=\"" << detail::going_fill(d.going)
             << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    }
    if (particle_overlay) {
        auto sm = detail::build_sites(t);
        for (const auto& [site, occ] : sm.state) {
            body << "<circle cx=\"" << s * site.first << "\" cy=\"" << -s * site.second
                 << "\" r=\"" << s / 3 << "\" fill=\"" << (occ ? "black" : "white")
                 << "\" stroke=\"black\"/>\n";
        }
    }
    std::ostringstream out;
    out << detail::svg_header(-2 * s * (A + 1), -2 * s * (A + 1), 2 * s * (A + 1),
                              2 * s * (A + 1) + 2 * s * L)
        << body.str() << "</svg>\n";
    return out.str();
}

/// Particle view, one text row per diagonal: occupied sites print as *,
/// empty ones as o.
inline std::string render_tiling_ascii(const TilingWindow& t) {
    auto sm = detail::build_sites(t);
    int A = t.half_width, L = t.word.length();
    std::ostringstream os;
    for (int m = 0; m <= L; ++m) {
        os << "m=" << m << (m < 10 ? "  |" : " |");
        for (int x2 = -2 * A + 1; x2 <= 2 * A - 1; x2 += 2)
            os << (detail::site_occupied(sm, t, x2, x2 - 2 * m) ? '*' : 'o');
        os << "|\n";
    }
    return os.str();
}

/// All graph edges of the window (matched or not), for rendering.
inline std::vector<MatchEdge> window_graph_edges(const MatchingWindow& m) {
    const ColumnGeometry& g = m.geo;
    std::vector<MatchEdge> out;
    auto lattice = [&](int c, auto&& fn) {
        int parity = g.lattice_parity(c);
        for (int y2 = m.lo2; y2 <= m.hi2; ++y2)
            if (((y2 % 2) + 2) % 2 == parity) fn(y2);
    };
    for (int c = 0; c < 2 * g.k(); ++c) {
        int dx = g.x2[static_cast<std::size_t>(c + 1)] - g.x2[static_cast<std::size_t>(c)];
        lattice(c, [&](int y2) {
            if (dx == 2) {
                if (((y2 % 2) + 2) % 2 == g.lattice_parity(c + 1))
                    out.push_back(make_edge({c, y2}, {c + 1, y2}));
            } else {
                for (int dy : {-1, 1}) {
                    int y = y2 + dy;
                    if (y < m.lo2 || y > m.hi2) continue;
                    if (((y % 2) + 2) % 2 == g.lattice_parity(c + 1))
                        out.push_back(make_edge({c, y2}, {c + 1, y}));
                }
            }
        });
    }
    return out;
}

/// Vertices as circles, edges as lines (matched bold), plus the dotted
/// zero-ordinate path through the columns.
inline std::string render_matching_svg(const MatchingWindow& m) {
    const ColumnGeometry& g = m.geo;
    int s = detail::kScale;
    auto X = [&](int c) { return s * g.x2[static_cast<std::size_t>(c)]; };
    std::ostringstream body;
    for (const auto& e : window_graph_edges(m)) {
        bool bold = m.matched(e);
        body << "<line x1=\"" << X(e.first.first) << "\" y1=\"" << -s * e.first.second
             << "\" x2=\"" << X(e.second.first) << "\" y2=\"" << -s * e.second.second
             << "\" stroke=\"" << (bold ? "#8b4513" : "#cccccc") << "\" stroke-width=\""
             << (bold ? 5 : 1) << "\"/>\n";
    }
    for (int c = 0; c <= 2 * g.k(); ++c) {
        int parity = g.lattice_parity(c);
        for (int y2 = m.lo2; y2 <= m.hi2; ++y2) {
            if (((y2 % 2) + 2) % 2 != parity) continue;
            body << "<circle cx=\"" << X(c) << "\" cy=\"" << -s * y2 << "\" r=\"3\" fill=\"black\"/>\n";
        }
    }
    body << "<polyline points=\"";
    for (int c = 0; c <= 2 * g.k(); ++c)
        body << X(c) << "," << -s * g.y2[static_cast<std::size_t>(c)] << " ";
    body << "\" fill=\"none\" stroke=\"red\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
    std::ostringstream out;
    out << detail::svg_header(-s, -s * (m.hi2 + 2), s * (g.x2.back() + 2), -s * (m.lo2 - 2))
        << body.str() << "</svg>\n";
    return out.str();
}

/// Dual tiling view: one rhombic tile per matched edge, drawn around the
/// edge with a fixed deterministic layout.
inline std::string render_matching_dual_svg(const MatchingWindow& m) {
    const ColumnGeometry& g = m.geo;
    int s = detail::kScale;
    auto X = [&](int c) { return s * g.x2[static_cast<std::size_t>(c)]; };
    std::ostringstream body;
    for (const auto& e : m.edges) {
        int x1 = X(e.first.first), y1 = -s * e.first.second;
        int x2 = X(e.second.first), y2 = -s * e.second.second;
        int mx = (x1 + x2) / 2, my = (y1 + y2) / 2;
        int nx = -(y2 - y1) / 2, ny = (x2 - x1) / 2;  // perpendicular half-vector
        body << "<polygon points=\"" << x1 << "," << y1 << " " << mx + nx << "," << my + ny << " "
             << x2 << "," << y2 << " " << mx - nx << "," << my - ny
             << "\" fill=\"#b0c4de\" stroke=\"black\" stroke-width=\"1\"/>\n";
        body << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
             << "\" stroke=\"#8b4513\" stroke-width=\"2\"/>\n";
    }
    std::ostringstream out;
    out << detail::svg_header(-s, -s * (m.hi2 + 2), s * (g.x2.back() + 2), -s * (m.lo2 - 2))
        << body.str() << "</svg>\n";
    return out.str();
}

}  // namespace oblique
