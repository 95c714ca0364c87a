#include "hatgrid/assemble.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace hatgrid {

namespace {

// plain-double copy of unembed, used only to skip the exact test far from the boundary
std::array<double, 3> unembed_approx(const std::array<double, 3>& f, const std::array<double, 3>& d, CentreMode mode)
{
    const double phi = 0.6180339887498949, phi2 = phi * phi, phi4 = phi2 * phi2;
    std::array<double, 3> n{};
    if (mode == CentreMode::tenkite) {
        for (int k = 0; k < 3; ++k) n[k] = (f[k] + d[k]) / (1 + phi2);
        return n;
    }
    int step = mode == CentreMode::standard ? 1 : 2;
    std::array<double, 3> g{};
    for (int k = 0; k < 3; ++k) g[k] = f[k] - d[(k + step) % 3];
    for (int k = 0; k < 3; ++k)
        n[k] = (g[k] + phi2 * g[(k + step) % 3] + phi4 * g[(k + 2 * step) % 3]) / (1 - phi4 * phi2);
    return n;
}

Embed2 centroid(const TriangleAddr& t)
{
    Rational shift = t.pointing() == Pointing::up ? Rational(1, 3) : Rational(2, 3);
    Embed2 x;
    for (int k = 0; k < 3; ++k) x.f[k] = GoldenNumber(Rational(t.t[k]) + shift);
    return x;
}

// the triangles within `reach` steps of t, both pointings
std::vector<TriangleAddr> nearby(const TriangleAddr& t, int reach)
{
    std::vector<TriangleAddr> out;
    for (int a = -reach; a <= reach; ++a)
        for (int b = -reach; b <= reach; ++b)
            for (int s : {-1, -2}) out.push_back({{t.t[0] + a, t.t[1] + b, s - t.t[0] - a - t.t[1] - b}});
    return out;
}

}  // namespace

bool InteriorRegion::contains(const TriangleAddr& t) const
{
    const double third = t.pointing() == Pointing::up ? 1.0 / 3 : 2.0 / 3;
    std::array<double, 3> f{t.t[0] + third, t.t[1] + third, t.t[2] + third};
    std::array<double, 3> d{params_.d[0].to_double(), params_.d[1].to_double(), params_.d[2].to_double()};
    auto na = unembed_approx(f, d, mode_);
    double m = std::max({std::fabs(na[0]), std::fabs(na[1]), std::fabs(na[2])});
    if (m < radius_ - 1e-6) return true;
    if (m > radius_ + 1e-6) return false;
    auto n = unembed(centroid(t), params_, mode_);
    GoldenNumber r(static_cast<long>(radius_));
    for (const auto& x : n)
        if (x > r || x < -r) return false;
    return true;
}

std::vector<TriangleAddr> InteriorRegion::triangles() const
{
    std::vector<TriangleAddr> out;
    if (radius_ < 0) return out;
    double dmax = 0;
    for (const auto& d : params_.d) dmax = std::max(dmax, std::fabs(d.to_double()));
    auto bound = static_cast<std::int64_t>(std::ceil(1.5 * radius_ + dmax + 3));
    for (std::int64_t a = -bound; a <= bound; ++a)
        for (std::int64_t b = -bound; b <= bound; ++b)
            for (std::int64_t s : {-2, -1}) {
                TriangleAddr t{{a, b, s - a - b}};
                if (contains(t)) out.push_back(t);
            }
    return out;
}

std::vector<KiteAddr> assemble_core6(const TriangleAddr& centre)
{
    return core_kites(centre, TileMode::hat8, Hand::base);
}

std::vector<KiteAddr> assemble_tile(const TriangleAddr& centre, const Orientation& o, Chirality chirality,
                                    TileMode mode, Roles roles)
{
    return tile_kites(centre, o.corner, mode, hand_of(chirality, roles));
}

std::vector<KiteAddr> assemble_hat(const TriangleAddr& centre, const Orientation& o, Chirality chirality,
                                   Roles roles)
{
    return assemble_tile(centre, o, chirality, TileMode::hat8, roles);
}

std::vector<KiteAddr> assemble_tenkite(const TriangleAddr& centre, const Orientation& o, Chirality chirality,
                                       Roles roles)
{
    return assemble_tile(centre, o, chirality, TileMode::tenkite, roles);
}

HatTile unflipped_tile(VertexId v, const FibParams& p, TileMode mode, Roles roles)
{
    HatTile tile;
    tile.vertex = v;
    auto iv = index6(v, p);
    auto pt = pattern_point(v, p, roles);
    tile.type = hat_type(pt);
    tile.centre = centre_triangle(iv, centre_mode(mode, roles));
    tile.orientation = vertex_orientation(pt, roles);
    tile.orientation.pointing = tile.centre.pointing();
    tile.kites = assemble_tile(tile.centre, tile.orientation, Chirality::unflipped, mode, roles);
    return tile;
}

std::vector<HatTile> place_flipped(const std::vector<HatTile>& unflipped, TileMode mode, Roles roles)
{
    std::vector<TriangleAddr> centres, lightblue;
    std::unordered_map<KiteAddr, std::size_t, KiteHash> owner;
    for (std::size_t i = 0; i < unflipped.size(); ++i) {
        const auto& u = unflipped[i];
        centres.push_back(u.centre);
        if (u.type == HatType::lightblue) lightblue.push_back(u.centre);
        for (const auto& k : u.kites) owner.emplace(k, i);
    }
    std::vector<HatTile> out;
    for (const auto& t : flipped_centres(centres, lightblue, mode, roles)) {
        std::set<std::size_t> near;
        for (const auto& n : nearby(t, 3))
            for (int j = 0; j < 3; ++j)
                if (auto it = owner.find({n, j}); it != owner.end()) near.insert(it->second);
        std::vector<PlacedTile> neighbours;
        for (auto i : near) neighbours.push_back({unflipped[i].centre, unflipped[i].kites});
        HatTile tile;
        tile.chirality = Chirality::flipped;
        tile.type = HatType::flipped;
        tile.centre = t;
        tile.orientation = flipped_orient(t, neighbours, mode, roles);
        tile.kites = assemble_tile(t, tile.orientation, Chirality::flipped, mode, roles);
        out.push_back(std::move(tile));
    }
    return out;
}

VerifyReport verify(const Tiling& t)
{
    VerifyReport rep;
    std::unordered_map<KiteAddr, int, KiteHash> cover;
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        const auto& tile = t.tiles[i];
        std::set<KiteAddr> own(tile.kites.begin(), tile.kites.end());
        std::string id = "tile " + std::to_string(i);
        if (tile.kites.size() != tile_size(t.mode)) rep.malformed.push_back(id + ": wrong kite count");
        if (own.size() != tile.kites.size()) rep.malformed.push_back(id + ": repeated kite");
        for (int j = 0; j < 3; ++j)
            if (!own.count({tile.centre, j})) {
                rep.malformed.push_back(id + ": centre triangle not covered");
                break;
            }
        for (const auto& k : tile.kites) ++cover[k];
    }
    std::set<KiteAddr> doubles;
    for (const auto& [k, c] : cover)
        if (c > 1) doubles.insert(k);
    rep.double_covered.assign(doubles.begin(), doubles.end());

    InteriorRegion region(t.params, centre_mode(t.mode, t.roles), t.window.interior);
    for (const auto& tri : region.triangles())
        for (int j = 0; j < 3; ++j) {
            ++rep.interior_kites;
            if (!cover.count({tri, j})) rep.missing.push_back({tri, j});
        }

    std::unordered_map<LatticePoint, std::vector<std::size_t>, TripleHash> lb_at, fl_at;
    std::vector<bool> inside(t.tiles.size());
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        const auto& tile = t.tiles[i];
        inside[i] = region.contains(tile.centre);
        if (inside[i]) ++rep.counts[tile.type];
        auto& idx = tile.type == HatType::lightblue ? lb_at : fl_at;
        if (tile.type == HatType::lightblue || tile.type == HatType::flipped)
            for (const auto& v : triangle_vertices(tile.centre)) idx[v].push_back(i);
    }
    auto touching = [&](const HatTile& tile, const auto& idx) {
        std::set<std::size_t> s;
        for (const auto& v : triangle_vertices(tile.centre))
            if (auto it = idx.find(v); it != idx.end()) s.insert(it->second.begin(), it->second.end());
        return s;
    };
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        if (!inside[i]) continue;
        const auto& tile = t.tiles[i];
        if (tile.type == HatType::flipped) {
            ++rep.clusters;
            rep.cluster_lightblue += touching(tile, lb_at).size();
        } else if (tile.type == HatType::lightblue && touching(tile, fl_at).size() != 1) {
            ++rep.lightblue_outside_clusters;
        }
    }
    return rep;
}

Tiling assemble_tiling(const FibParams& p, int radius, TileMode mode, Roles roles, int margin)
{
    if (radius < 0) throw std::invalid_argument("negative radius");
    Tiling t{p, mode, roles, {radius, std::max(radius - margin, 0)}, {}};
    for (const auto& v : enumerate_window(radius)) t.tiles.push_back(unflipped_tile(v, p, mode, roles));
    auto flipped = place_flipped(t.tiles, mode, roles);
    t.tiles.insert(t.tiles.end(), flipped.begin(), flipped.end());
    return t;
}

Tiling generate(const FibParams& p, int radius, TileMode mode, Roles roles, int margin)
{
    Tiling t = assemble_tiling(p, radius, mode, roles, margin);
    auto rep = verify(t);
    if (!rep.ok())
        throw GenerationFailed("generated tiling has " + std::to_string(rep.missing.size()) + " missing and " +
                                   std::to_string(rep.double_covered.size()) + " double-covered kites",
                               rep);
    return t;
}

CentreLineRows centre_line_rows(const Tiling& t)
{
    CentreLineRows rows;
    std::set<std::pair<int, std::int64_t>> bad;
    for (const auto& tile : t.tiles) {
        bool fl = tile.chirality == Chirality::flipped;
        for (int k = 0; k < 3; ++k) {
            auto key = std::make_pair(k, tile.centre.t[k]);
            auto [it, fresh] = rows.flipped.emplace(key, fl);
            if (!fresh && it->second != fl) bad.insert(key);
        }
    }
    rows.conflicts = bad.size();
    return rows;
}

std::optional<std::vector<bool>> tile_decoration(const HatTile& tile, TileMode mode, Roles roles,
                                                 const CentreLineRows& rows)
{
    std::vector<bool> out;
    for (const auto& k : tile_kites_canonical(tile.centre, tile.orientation.corner, mode,
                                              hand_of(tile.chirality, roles))) {
        auto it = rows.flipped.find({k.corner, k.triangle.t[k.corner]});
        if (it == rows.flipped.end()) return std::nullopt;
        out.push_back(it->second);
    }
    return out;
}

}  // namespace hatgrid
