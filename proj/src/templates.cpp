#include "hatgrid/templates.hpp"

#include <stdexcept>
#include <utility>

namespace hatgrid {

namespace {

// offsets are relative to a down centre; an up centre uses the point reflection
struct Rel {
    Triple delta;
    int corner;
};

constexpr Triple e0{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1}, zero{0, 0, 0};

const std::vector<Rel> kHatCore{{zero, 0}, {zero, 1}, {zero, 2}, {e0, 2}, {e1, 0}, {e2, 1}};
const std::vector<Rel> kHatExtra0{{e1, 2}, {{-1, 0, 1}, 2}};

const std::vector<Rel> kTenCore{{zero, 0}, {zero, 1}, {zero, 2}, {e0, 1}, {e1, 2}, {e2, 0}};
// extras at template corner 2
const std::vector<Rel> kTenExtra2{{e1, 0}, {e1, 1}, {{0, 1, -1}, 0}, {{0, 1, -1}, 1}};

Rel rotate(const Rel& r)
{
    return {hatgrid::rotate(r.delta), (r.corner + 1) % 3};
}

Rel mirror(const Rel& r)
{
    return {hatgrid::mirror(r.delta), mirror_corner(r.corner)};
}

std::vector<Rel> rotated(std::vector<Rel> rs, int times)
{
    for (int i = 0; i < times; ++i)
        for (auto& r : rs) r = rotate(r);
    return rs;
}

// extras of the base template sitting at template corner c
std::vector<Rel> base_extras(TileMode mode, int c)
{
    if (mode == TileMode::hat8) return rotated(kHatExtra0, c);
    return rotated(kTenExtra2, (c + 1) % 3);
}

// Template corner in the unmirrored frame. The 10-kite extras sit one corner further on
// than the hat's, in the handedness of the tile; a mirror template at corner c is the
// reflection of the base one at the mirrored corner.
int base_corner(int corner, TileMode mode, Hand hand)
{
    int c = corner;
    if (mode == TileMode::tenkite) c = hand == Hand::base ? (corner + 1) % 3 : (corner + 2) % 3;
    return hand == Hand::base ? c : mirror_corner(c);
}

std::vector<KiteAddr> place(const TriangleAddr& centre, const std::vector<Rel>& rel, Hand hand)
{
    std::vector<KiteAddr> out;
    out.reserve(rel.size());
    bool down = centre.pointing() == Pointing::down;
    for (Rel r : rel) {
        if (hand == Hand::mirror) r = mirror(r);
        KiteAddr k;
        for (int i = 0; i < 3; ++i) k.triangle.t[i] = down ? centre.t[i] + r.delta[i] : centre.t[i] - r.delta[i];
        k.corner = r.corner;
        out.push_back(k);
    }
    return out;
}

}  // namespace

const char* to_string(TileMode m)
{
    return m == TileMode::hat8 ? "hat8" : "tenkite";
}

const char* to_string(Chirality c)
{
    return c == Chirality::unflipped ? "unflipped" : "flipped";
}

const char* to_string(Roles r)
{
    return r == Roles::standard ? "standard" : "mirrored";
}

TileMode parse_tile_mode(const std::string& s)
{
    if (s == "hat8") return TileMode::hat8;
    if (s == "tenkite") return TileMode::tenkite;
    throw std::invalid_argument("unknown tile mode '" + s + "'");
}

Chirality parse_chirality(const std::string& s)
{
    if (s == "unflipped") return Chirality::unflipped;
    if (s == "flipped") return Chirality::flipped;
    throw std::invalid_argument("unknown chirality '" + s + "'");
}

Roles parse_roles(const std::string& s)
{
    if (s == "standard") return Roles::standard;
    if (s == "mirrored") return Roles::mirrored;
    throw std::invalid_argument("unknown roles '" + s + "'");
}

Hand hand_of(Chirality c, Roles roles)
{
    bool mirror = (c == Chirality::flipped) != (roles == Roles::mirrored);
    return mirror ? Hand::mirror : Hand::base;
}

CentreMode centre_mode(TileMode mode, Roles roles)
{
    if (mode == TileMode::tenkite) return CentreMode::tenkite;
    return centre_mode(roles);
}

std::size_t tile_size(TileMode mode)
{
    return mode == TileMode::hat8 ? 8 : 10;
}

std::vector<KiteAddr> core_kites(const TriangleAddr& centre, TileMode mode, Hand hand)
{
    return place(centre, mode == TileMode::hat8 ? kHatCore : kTenCore, hand);
}

std::vector<KiteAddr> extra_kites(const TriangleAddr& centre, int corner, TileMode mode, Hand hand)
{
    if (corner < 0 || corner > 2) throw std::invalid_argument("corner must be 0, 1 or 2");
    return place(centre, base_extras(mode, base_corner(corner, mode, hand)), hand);
}

std::vector<KiteAddr> tile_kites_canonical(const TriangleAddr& centre, int corner, TileMode mode, Hand hand)
{
    int tc = base_corner(corner, mode, hand);
    int turns = mode == TileMode::hat8 ? tc : (tc + 1) % 3;
    const auto& core = mode == TileMode::hat8 ? kHatCore : kTenCore;
    std::vector<Rel> rel;
    for (int g = 0; g < 2; ++g)
        for (int i = 0; i < 3; ++i) rel.push_back(core[g * 3 + (i + turns) % 3]);
    auto out = place(centre, rel, hand);
    auto ex = place(centre, base_extras(mode, tc), hand);
    out.insert(out.end(), ex.begin(), ex.end());
    return out;
}

std::vector<KiteAddr> tile_kites(const TriangleAddr& centre, int corner, TileMode mode, Hand hand)
{
    auto out = core_kites(centre, mode, hand);
    auto ex = extra_kites(centre, corner, mode, hand);
    out.insert(out.end(), ex.begin(), ex.end());
    return out;
}

}  // namespace hatgrid
