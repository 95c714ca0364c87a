#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hatgrid/classify.hpp"

namespace hatgrid {

// The pattern triangle is cut into convex regions; each carries a hat type and an
// orientation rule. Vertices are exact barycentric points (f0, f1, f2), sum 1.
struct Region {
    std::string name;
    HatType type = HatType::grey;
    std::vector<Bary> polygon;
};

struct RegionTable {
    std::vector<Region> regions;

    // index of the region strictly containing f; DegenerateParameter on a boundary
    std::size_t locate(const Bary& f) const;
    std::size_t find(const std::string& name) const;
    void validate() const;
    std::string to_json_text() const;
    static RegionTable from_json_text(const std::string& text);
    static RegionTable builtin();
};

// Either a base colour, or an affine self-map of the pattern
//   f -> roll^k(target + scale (f - source)), reduced back into the triangle,
// whose result colour is pushed through colour_map.
struct OrientationRule {
    std::optional<int> base_colour;
    Bary source;
    Bary target;
    GoldenNumber scale;
    int roll = 0;
    std::array<int, 3> colour_map{0, 1, 2};
};

struct OrientationTable {
    std::vector<OrientationRule> rules;  // parallel to RegionTable::regions

    void validate(const RegionTable& regions) const;
    std::string to_json_text(const RegionTable& regions) const;
    static OrientationTable from_json_text(const std::string& text, const RegionTable& regions);
    static OrientationTable builtin(const RegionTable& regions);
};

struct Tables {
    RegionTable regions;
    OrientationTable orientation;
    std::string source;
};

inline constexpr const char* kRegionFile = "pattern_regions.json";
inline constexpr const char* kOrientationFile = "orientation_maps.json";

Tables builtin_tables();
Tables load_tables(const std::filesystem::path& dir);
void write_tables(const Tables& t, const std::filesystem::path& dir);
// HATGRID_TABLE_DIR if set, else the shipped data directory, else the built-in copy
const Tables& active_tables();
GoldenNumber polygon_area2(const std::vector<Bary>& poly);

}  // namespace hatgrid
