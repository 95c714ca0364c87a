#pragma once

#include <vector>

#include "hatgrid/realise.hpp"

namespace hatgrid {

// hat8: the 8-kite hat. tenkite: the 10-kite tile with swapped edge lengths.
enum class TileMode { hat8, tenkite };
enum class Chirality { unflipped, flipped };
// base: the kite template as drawn; mirror: its reflection swapping families 1 and 2
enum class Hand { base, mirror };

const char* to_string(TileMode m);
const char* to_string(Chirality c);
const char* to_string(Roles r);
TileMode parse_tile_mode(const std::string& s);
Chirality parse_chirality(const std::string& s);
Roles parse_roles(const std::string& s);

Hand hand_of(Chirality c, Roles roles);
CentreMode centre_mode(TileMode mode, Roles roles);
std::size_t tile_size(TileMode mode);

// The 2pi/3-symmetric part: the three centre kites plus one kite in each edge neighbour.
std::vector<KiteAddr> core_kites(const TriangleAddr& centre, TileMode mode, Hand hand);
// The kites completing the tile at the given centre corner (2 for hats, 4 for 10-kite tiles).
std::vector<KiteAddr> extra_kites(const TriangleAddr& centre, int corner, TileMode mode, Hand hand);
std::vector<KiteAddr> tile_kites(const TriangleAddr& centre, int corner, TileMode mode, Hand hand);
// Same kites, core reordered so that position i plays the same role in every tile
// whatever its corner.
std::vector<KiteAddr> tile_kites_canonical(const TriangleAddr& centre, int corner, TileMode mode, Hand hand);

}  // namespace hatgrid
