#include "hatgrid/orient.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hatgrid/tables.hpp"

namespace hatgrid {

namespace {

Bary roll(const Bary& x, int times)
{
    Bary y = x;
    for (int i = 0; i < times; ++i) y = {y[2], y[0], y[1]};
    return y;
}

// back into the pattern triangle: drop integer parts, reflect the second plane
Bary reduce(const Bary& x)
{
    Bary g;
    GoldenNumber s(0);
    for (int k = 0; k < 3; ++k) {
        g[k] = x[k] - GoldenNumber(Rational(floor(x[k])));
        s += g[k];
    }
    if (s == GoldenNumber(2)) {
        for (auto& v : g) v = GoldenNumber(1) - v;
    } else if (!(s == GoldenNumber(1))) {
        throw DegenerateParameter("fractal map hit a lattice line");
    }
    return g;
}

}  // namespace

FractalTrace fractal_trace(const PatternPoint& pt, int cap)
{
    const auto& tables = active_tables();
    FractalTrace tr;
    Bary f = pt.f;
    std::vector<Bary> seen;
    std::vector<const OrientationRule*> applied;
    // colour at step `from`, given the colour at step `to`
    auto pull = [&](std::size_t from, std::size_t to, int c) {
        for (auto i = to; i-- > from;) c = applied[i]->colour_map[c];
        return c;
    };
    for (int it = 0;; ++it) {
        for (std::size_t i = 0; i < seen.size(); ++i) {
            if (!(seen[i] == f)) continue;
            int fixed = -1, count = 0;
            for (int c = 0; c < 3; ++c)
                if (pull(i, applied.size(), c) == c) {
                    fixed = c;
                    ++count;
                }
            if (count != 1) throw ResolutionFailure("fractal orientation cycles without a forced colour");
            tr.colour = pull(0, i, fixed);
            tr.iterations = it;
            tr.period = it - static_cast<int>(i);
            return tr;
        }
        std::size_t r = tables.regions.locate(f);
        tr.regions.push_back(tables.regions.regions[r].name);
        const auto& rule = tables.orientation.rules[r];
        if (rule.base_colour) {
            tr.colour = pull(0, applied.size(), *rule.base_colour);
            tr.iterations = it;
            return tr;
        }
        if (it >= cap) throw ResolutionFailure("fractal orientation did not settle within the iteration cap");
        seen.push_back(f);
        Bary g;
        for (int k = 0; k < 3; ++k) g[k] = rule.target[k] + rule.scale * (f[k] - rule.source[k]);
        f = reduce(roll(g, rule.roll));
        applied.push_back(&rule);
    }
}

Orientation fractal_orient(const PatternPoint& pt, HatType type, int cap)
{
    if (type == HatType::flipped) throw std::invalid_argument("flipped hats are not on the pattern");
    if (hat_type(pt) != type) throw InternalInconsistency("hat type does not match the pattern region");
    return {fractal_trace(pt, cap).colour, pt.pointing};
}

Orientation vertex_orientation(const PatternPoint& pt, Roles roles, int cap)
{
    Orientation o{fractal_trace(pt, cap).colour, pt.pointing};
    if (roles == Roles::mirrored) o.corner = mirror_corner(o.corner);
    return o;
}

Orientation flipped_orient(const TriangleAddr& centre, const std::vector<PlacedTile>& neighbours, TileMode mode,
                           Roles roles)
{
    std::unordered_set<KiteAddr, KiteHash> taken;
    for (const auto& n : neighbours) taken.insert(n.kites.begin(), n.kites.end());
    Hand hand = hand_of(Chirality::flipped, roles);
    std::vector<int> ok;
    for (int c = 0; c < 3; ++c) {
        bool free = true;
        for (const auto& k : tile_kites(centre, c, mode, hand))
            if (taken.count(k)) {
                free = false;
                break;
            }
        if (free) ok.push_back(c);
    }
    if (ok.size() != 1)
        throw InternalInconsistency(ok.empty() ? "no corner fits the flipped tile"
                                               : "several corners fit the flipped tile");
    return {ok[0], centre.pointing()};
}

std::vector<TriangleAddr> flipped_centres(const std::vector<TriangleAddr>& centres,
                                          const std::vector<TriangleAddr>& lightblue_centres,
                                          TileMode mode, Roles roles)
{
    std::unordered_set<TriangleAddr, TriangleHash> centre_set(centres.begin(), centres.end());
    std::unordered_set<KiteAddr, KiteHash> core;
    Hand hand = hand_of(Chirality::unflipped, roles);
    for (const auto& c : centres)
        for (const auto& k : core_kites(c, mode, hand)) core.insert(k);
    std::unordered_map<LatticePoint, std::vector<std::size_t>, TripleHash> at_vertex;
    for (std::size_t i = 0; i < lightblue_centres.size(); ++i)
        for (const auto& v : triangle_vertices(lightblue_centres[i])) at_vertex[v].push_back(i);

    std::set<TriangleAddr> out;
    std::unordered_set<TriangleAddr, TriangleHash> seen;
    for (const auto& lb : lightblue_centres)
        for (const auto& v : triangle_vertices(lb))
            for (const auto& t : triangles_at(v)) {
                if (!seen.insert(t).second || centre_set.count(t)) continue;
                bool used = false;
                for (int j = 0; j < 3 && !used; ++j) used = core.count({t, j}) > 0;
                if (used) continue;
                std::set<std::size_t> touching;
                for (const auto& w : triangle_vertices(t)) {
                    auto it = at_vertex.find(w);
                    if (it != at_vertex.end()) touching.insert(it->second.begin(), it->second.end());
                }
                if (touching.size() == 3) out.insert(t);
            }
    return {out.begin(), out.end()};
}

}  // namespace hatgrid
