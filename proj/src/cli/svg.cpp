#include "hatgrid/cli.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace hatgrid::cli {

namespace {

// kite corners in gap coordinates scaled by 6, so midpoints and centroids stay integral
using P6 = Triple;

std::array<P6, 4> kite_outline(const KiteAddr& k)
{
    auto v = triangle_vertices(k.triangle);
    int j = k.corner, a = (j + 1) % 3, b = (j + 2) % 3;
    std::array<P6, 4> out;
    for (int i = 0; i < 3; ++i) {
        out[0][i] = 6 * v[j][i];
        out[1][i] = 3 * (v[j][i] + v[a][i]);
        out[2][i] = 2 * (v[0][i] + v[1][i] + v[2][i]);
        out[3][i] = 3 * (v[j][i] + v[b][i]);
    }
    return out;
}

std::array<double, 2> to_svg(const P6& p)
{
    auto xy = to_cartesian(std::array<double, 3>{p[0] / 6.0, p[1] / 6.0, p[2] / 6.0});
    return {100 * xy[0], -100 * xy[1]};
}

// boundary of the union of a tile's kites, as closed loops
std::vector<std::vector<P6>> outline(const std::vector<KiteAddr>& kites)
{
    std::map<std::pair<P6, P6>, int> edges;
    for (const auto& k : kites) {
        auto q = kite_outline(k);
        for (int i = 0; i < 4; ++i) {
            P6 a = q[i], b = q[(i + 1) % 4];
            if (b < a) std::swap(a, b);
            ++edges[{a, b}];
        }
    }
    std::map<P6, std::vector<P6>> adj;
    for (const auto& [e, c] : edges)
        if (c == 1) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
    auto key = [](const P6& a, const P6& b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); };
    std::set<std::pair<P6, P6>> used;
    std::vector<std::vector<P6>> loops;
    for (const auto& [start, nbrs] : adj)
        for (const auto& first : nbrs) {
            if (!used.insert(key(start, first)).second) continue;
            std::vector<P6> loop{start};
            P6 cur = first;
            while (cur != start) {
                loop.push_back(cur);
                const P6* next = nullptr;
                for (const auto& n : adj[cur])
                    if (!used.count(key(cur, n))) {
                        next = &n;
                        break;
                    }
                if (!next) break;
                used.insert(key(cur, *next));
                cur = *next;
            }
            loops.push_back(std::move(loop));
        }
    return loops;
}

const char* type_fill(HatType t)
{
    switch (t) {
    case HatType::lightblue: return "#9fd3f0";
    case HatType::grey: return "#b4b4b4";
    case HatType::white_pair: return "#ffffff";
    case HatType::white_isolated: return "#fdf6e3";
    case HatType::flipped: return "#1d3f8f";
    }
    return "#000000";
}

const char* corner_fill(int corner, Chirality c)
{
    static const char* light[3] = {"#f0b35a", "#7cc48a", "#d987b0"};
    static const char* dark[3] = {"#b57720", "#3d8a4c", "#9c4372"};
    return c == Chirality::unflipped ? light[corner] : dark[corner];
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", std::fabs(x) < 5e-4 ? 0.0 : x);
    return buf;
}

}  // namespace

std::string tiling_to_svg(const Tiling& t, Colouring colouring, bool decoration)
{
    double minx = std::numeric_limits<double>::max(), miny = minx, maxx = -minx, maxy = -minx;
    std::ostringstream body;
    for (const auto& tile : t.tiles) {
        const char* fill = colouring == Colouring::by_type ? type_fill(tile.type)
                                                           : corner_fill(tile.orientation.corner, tile.chirality);
        body << "<path class=\"" << to_string(tile.type) << "\" fill=\"" << fill << "\" d=\"";
        for (const auto& loop : outline(tile.kites)) {
            for (std::size_t i = 0; i < loop.size(); ++i) {
                auto xy = to_svg(loop[i]);
                minx = std::min(minx, xy[0]);
                maxx = std::max(maxx, xy[0]);
                miny = std::min(miny, xy[1]);
                maxy = std::max(maxy, xy[1]);
                body << (i ? "L" : "M") << fmt(xy[0]) << "," << fmt(xy[1]);
            }
            body << "Z";
        }
        body << "\"/>\n";
    }
    if (decoration) {
        auto rows = centre_line_rows(t);
        body << "<g class=\"centre-lines\" stroke-width=\"6\" stroke-linecap=\"round\">\n";
        for (const auto& tile : t.tiles)
            for (const auto& k : tile.kites) {
                auto it = rows.flipped.find({k.corner, k.triangle.t[k.corner]});
                if (it == rows.flipped.end()) continue;
                auto q = kite_outline(k);
                auto a = to_svg(q[1]), b = to_svg(q[3]);
                body << "<line x1=\"" << fmt(a[0]) << "\" y1=\"" << fmt(a[1]) << "\" x2=\"" << fmt(b[0])
                     << "\" y2=\"" << fmt(b[1]) << "\" stroke=\"" << (it->second ? "#2c7bb6" : "#d7301f")
                     << "\"/>\n";
            }
        body << "</g>\n";
    }
    if (t.tiles.empty()) minx = miny = maxx = maxy = 0;
    double pad = 20;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx - pad) << " " << fmt(miny - pad) << " "
        << fmt(maxx - minx + 2 * pad) << " " << fmt(maxy - miny + 2 * pad) << "\">\n"
        << "<g stroke=\"#202020\" stroke-width=\"2\" stroke-linejoin=\"round\">\n"
        << body.str() << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace hatgrid::cli
