#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hatgrid/classify.hpp"
#include "hatgrid/templates.hpp"

namespace hatgrid {

// corner: the centre-triangle corner carrying the extra kites. Hats rotated by pi share
// the corner index (and so the colour) and differ in pointing.
struct Orientation {
    int corner = 0;
    Pointing pointing = Pointing::up;
    friend bool operator==(const Orientation&, const Orientation&) = default;
};

inline int colour(const Orientation& o)
{
    return o.corner;
}

struct FractalTrace {
    int colour = 0;
    int iterations = 0;
    std::vector<std::string> regions;  // region names visited, base region last
    int period = 0;                    // closed orbit length when no base region was reached
};

inline constexpr int kDefaultIterationCap = 64;

// Colour of a pattern point: apply the self-maps until a base region is reached, then
// push the base colour back through the colour maps. With rational offsets an orbit can
// close up without touching a base region; its colour is then the one colour the
// composed colour map over one period leaves fixed.
FractalTrace fractal_trace(const PatternPoint& pt, int cap = kDefaultIterationCap);
Orientation fractal_orient(const PatternPoint& pt, HatType type, int cap = kDefaultIterationCap);
// Orientation of T's vertex in the given roles (the mirrored pattern for mirrored roles,
// then mapped back to geometric corners).
Orientation vertex_orientation(const PatternPoint& pt, Roles roles, int cap = kDefaultIterationCap);

struct PlacedTile {
    TriangleAddr centre;
    std::vector<KiteAddr> kites;
};

// The unique corner whose flipped tile avoids every neighbour kite.
Orientation flipped_orient(const TriangleAddr& centre, const std::vector<PlacedTile>& neighbours, TileMode mode,
                           Roles roles);

// Triangles that take a flipped tile: not a centre, none of their kites inside an
// unflipped core, and touching the centre triangles of exactly three lightblue hats.
std::vector<TriangleAddr> flipped_centres(const std::vector<TriangleAddr>& centres,
                                          const std::vector<TriangleAddr>& lightblue_centres,
                                          TileMode mode, Roles roles);

// Constraint propagation over kites: lay every core, then repeatedly discard corners
// whose extra kites are taken and commit hats left with a single corner.
struct OracleResult {
    std::map<VertexId, Orientation> orientation;
    std::map<VertexId, int> round;
    std::vector<VertexId> unresolved;
    std::map<TriangleAddr, Orientation> flipped;
    int rounds = 0;
    int window_radius = 0;
};

OracleResult oracle_orient(const std::vector<VertexId>& window, const std::map<VertexId, HatType>& types,
                           const std::map<VertexId, TriangleAddr>& centres, Roles roles = Roles::standard);

class OracleSolver {
public:
    OracleSolver(FibParams p, Roles roles = Roles::standard) : params_(std::move(p)), roles_(roles) {}
    OracleResult solve(int window_radius) const;
    // doubles the window from twice the target until the target ball resolves, up to 8x
    OracleResult solve_adaptive(int target_radius) const;

private:
    FibParams params_;
    Roles roles_;
};

}  // namespace hatgrid
