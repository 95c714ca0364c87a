#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hatgrid/assemble.hpp"

namespace hatgrid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitDegenerate = 2;
inline constexpr int kExitDefects = 3;

enum class OutputFormat { json, svg };
enum class Colouring { by_type, by_orientation };

struct RunConfig {
    std::string d0 = "1/5";
    std::string d1 = "1/7";
    int radius = 20;
    int margin = kDefaultMargin;
    TileMode mode = TileMode::hat8;
    Roles roles = Roles::standard;
    OutputFormat format = OutputFormat::json;
    Colouring colouring = Colouring::by_type;
    bool decoration = false;

    // d2 = -d0 - d1; throws MalformedNumber or DegenerateParameter
    FibParams params() const;
};

using ParamPair = std::pair<std::string, std::string>;
// five rational parameter sets used by the acceptance suite and oracle-diff
std::vector<ParamPair> preset_params();

std::string tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const std::string& text);
std::string report_to_json(const VerifyReport& r);
std::string tiling_to_svg(const Tiling& t, Colouring colouring, bool decoration);

int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const std::string& document, std::ostream& out, std::ostream& err);
int run_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_oracle_diff(const std::vector<ParamPair>& params, int radius, Roles roles, std::ostream& out,
                    std::ostream& err);
int run_fibword(const std::string& d, std::int64_t start, std::int64_t count, std::ostream& out, std::ostream& err);
// writes the built-in tables and checks them against oracle windows of the given radius
int run_tables(const std::string& dir, int check_radius, std::ostream& out, std::ostream& err);

}  // namespace hatgrid::cli
