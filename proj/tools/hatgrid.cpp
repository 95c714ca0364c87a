#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hatgrid/cli.hpp"

using namespace hatgrid;
using namespace hatgrid::cli;

namespace {

void add_params(CLI::App* app, RunConfig& cfg)
{
    app->add_option("--d0", cfg.d0, "offset of line family 0 (rational, e.g. 1/5 or 0.2)")->capture_default_str();
    app->add_option("--d1", cfg.d1, "offset of line family 1; d2 = -d0-d1")->capture_default_str();
    app->add_option("--radius", cfg.radius, "window radius in T")->capture_default_str()->check(CLI::NonNegativeNumber);
    app->add_option("--margin", cfg.margin, "interior margin")->capture_default_str()->check(CLI::NonNegativeNumber);
}

int emit(const std::string& path, const std::function<int(std::ostream&)>& body)
{
    if (path.empty() || path == "-") return body(std::cout);
    std::ostringstream buf;
    int rc = body(buf);
    if (rc == kExitOk) {
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << path << "\n";
            return kExitFailure;
        }
        f << buf.str();
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"hatgrid: hat monotile tilings computed directly from two offsets"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string out_path;
    std::map<std::string, TileMode> modes{{"hat8", TileMode::hat8}, {"tenkite", TileMode::tenkite}};
    std::map<std::string, Roles> roles{{"standard", Roles::standard}, {"mirrored", Roles::mirrored}};
    std::map<std::string, OutputFormat> formats{{"json", OutputFormat::json}, {"svg", OutputFormat::svg}};
    std::map<std::string, Colouring> colourings{{"by_type", Colouring::by_type},
                                                {"by_orientation", Colouring::by_orientation}};

    auto* gen = app.add_subcommand("generate", "build and verify a tiling, write JSON or SVG");
    add_params(gen, cfg);
    gen->add_option("--mode", cfg.mode, "hat8 or tenkite")->transform(CLI::CheckedTransformer(modes));
    gen->add_option("--roles", cfg.roles, "standard or mirrored")->transform(CLI::CheckedTransformer(roles));
    gen->add_option("--format", cfg.format, "json or svg")->transform(CLI::CheckedTransformer(formats));
    gen->add_option("--colouring", cfg.colouring, "by_type or by_orientation")
        ->transform(CLI::CheckedTransformer(colourings));
    gen->add_flag("--decoration", cfg.decoration, "draw the centre-line decoration (SVG)");
    gen->add_option("-o,--out", out_path, "output file (default stdout)");

    std::string verify_path;
    auto* ver = app.add_subcommand("verify", "check a tiling JSON document for exact coverage");
    ver->add_option("file", verify_path, "tiling JSON")->required();

    auto* stats = app.add_subcommand("stats", "type counts, H clusters and gap statistics");
    add_params(stats, cfg);
    stats->add_option("--mode", cfg.mode, "hat8 or tenkite")->transform(CLI::CheckedTransformer(modes));
    stats->add_option("--roles", cfg.roles, "standard or mirrored")->transform(CLI::CheckedTransformer(roles));

    int oracle_radius = 30;
    bool use_presets = false;
    auto* diff = app.add_subcommand("oracle-diff", "compare fractal orientations with constraint propagation");
    add_params(diff, cfg);
    diff->add_option("--oracle-radius", oracle_radius, "propagation window radius")->capture_default_str();
    diff->add_option("--roles", cfg.roles, "standard or mirrored")->transform(CLI::CheckedTransformer(roles));
    diff->add_flag("--presets", use_presets, "run the five preset parameter sets");

    std::string word_d = "1/5";
    std::int64_t word_start = 0, word_count = 100;
    auto* word = app.add_subcommand("fibword", "print the S/L gap word of one line family");
    word->add_option("--d", word_d, "offset (rational or q+r*phi)")->capture_default_str();
    word->add_option("--start", word_start, "first line index")->capture_default_str();
    word->add_option("--count", word_count, "number of gaps")->capture_default_str()->check(CLI::NonNegativeNumber);

    std::string table_dir = "data/tables";
    int check_radius = 0;
    auto* tables = app.add_subcommand("tables", "write the pattern tables and check them against the oracle");
    tables->add_option("--out", table_dir, "directory")->capture_default_str();
    tables->add_option("--check-radius", check_radius, "oracle window radius for the check (0 skips)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) return emit(out_path, [&](std::ostream& o) { return run_generate(cfg, o, std::cerr); });
        if (*ver) {
            std::ifstream in(verify_path, std::ios::binary);
            if (!in) {
                std::cerr << "cannot read " << verify_path << "\n";
                return kExitFailure;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            return run_verify(ss.str(), std::cout, std::cerr);
        }
        if (*stats) return run_stats(cfg, std::cout, std::cerr);
        if (*diff) {
            std::vector<ParamPair> ps = use_presets ? preset_params() : std::vector<ParamPair>{{cfg.d0, cfg.d1}};
            return run_oracle_diff(ps, oracle_radius, cfg.roles, std::cout, std::cerr);
        }
        if (*word) return run_fibword(word_d, word_start, word_count, std::cout, std::cerr);
        if (*tables) return run_tables(table_dir, check_radius, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
