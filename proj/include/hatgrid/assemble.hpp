#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hatgrid/orient.hpp"

namespace hatgrid {

struct HatTile {
    Chirality chirality = Chirality::unflipped;
    HatType type = HatType::grey;
    Orientation orientation;
    TriangleAddr centre;
    std::vector<KiteAddr> kites;
    std::optional<VertexId> vertex;  // set for unflipped tiles
};

struct Window {
    int radius = 0;
    int interior = 0;
};

inline constexpr int kDefaultMargin = 4;

struct Tiling {
    FibParams params;
    TileMode mode = TileMode::hat8;
    Roles roles = Roles::standard;
    Window window;
    std::vector<HatTile> tiles;
};

// Triangles whose centroid maps back into the hexagonal ball of T of the interior radius.
class InteriorRegion {
public:
    InteriorRegion(FibParams p, CentreMode mode, int radius) : params_(std::move(p)), mode_(mode), radius_(radius) {}
    bool contains(const TriangleAddr& t) const;
    std::vector<TriangleAddr> triangles() const;

private:
    FibParams params_;
    CentreMode mode_;
    int radius_;
};

struct VerifyReport {
    std::vector<KiteAddr> missing;
    std::vector<KiteAddr> double_covered;
    std::vector<std::string> malformed;  // per-tile structural faults
    std::map<HatType, std::size_t> counts;  // tiles with interior centre triangles
    std::size_t interior_kites = 0;
    // H clusters: interior flipped tiles and the lightblue tiles touching them
    std::size_t clusters = 0;
    std::size_t cluster_lightblue = 0;
    std::size_t lightblue_outside_clusters = 0;
    bool ok() const { return missing.empty() && double_covered.empty() && malformed.empty(); }
};

std::vector<KiteAddr> assemble_core6(const TriangleAddr& centre);
std::vector<KiteAddr> assemble_hat(const TriangleAddr& centre, const Orientation& o, Chirality chirality,
                                   Roles roles);
std::vector<KiteAddr> assemble_tenkite(const TriangleAddr& centre, const Orientation& o, Chirality chirality,
                                       Roles roles);
std::vector<KiteAddr> assemble_tile(const TriangleAddr& centre, const Orientation& o, Chirality chirality,
                                    TileMode mode, Roles roles);

std::vector<HatTile> place_flipped(const std::vector<HatTile>& unflipped, TileMode mode, Roles roles);
VerifyReport verify(const Tiling& t);

// Thrown when a generated tiling fails verification.
struct GenerationFailed : std::runtime_error {
    GenerationFailed(const std::string& what, VerifyReport r) : std::runtime_error(what), report(std::move(r)) {}
    VerifyReport report;
};

HatTile unflipped_tile(VertexId v, const FibParams& p, TileMode mode, Roles roles);
Tiling assemble_tiling(const FibParams& p, int radius, TileMode mode, Roles roles, int margin = kDefaultMargin);
Tiling generate(const FibParams& p, int radius, TileMode mode, Roles roles, int margin = kDefaultMargin);

// Rows of U's centre lines (family k, index t_k) seen by centre triangles: false for
// unflipped, true for flipped. A row seen by both chiralities is reported as a conflict.
struct CentreLineRows {
    std::map<std::pair<int, std::int64_t>, bool> flipped;
    std::size_t conflicts = 0;
};
CentreLineRows centre_line_rows(const Tiling& t);
// For each kite of the tile in canonical template order, whether its centre-line row is a
// flipped row; empty when a row is not seen inside the tiling.
std::optional<std::vector<bool>> tile_decoration(const HatTile& tile, TileMode mode, Roles roles,
                                                 const CentreLineRows& rows);

}  // namespace hatgrid
