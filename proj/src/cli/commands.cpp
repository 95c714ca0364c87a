#include "hatgrid/cli.hpp"

#include <iomanip>
#include <ostream>

#include "hatgrid/tables.hpp"

namespace hatgrid::cli {

namespace {

const HatType kTypes[] = {HatType::lightblue, HatType::grey, HatType::white_pair, HatType::white_isolated,
                          HatType::flipped};

std::size_t count_of(const VerifyReport& r, HatType t)
{
    auto it = r.counts.find(t);
    return it == r.counts.end() ? 0 : it->second;
}

FibParams pair_params(const ParamPair& pp)
{
    return FibParams::from_pair(GoldenNumber(parse_rational(pp.first)), GoldenNumber(parse_rational(pp.second)));
}

struct OracleCheck {
    std::size_t resolved = 0;
    std::vector<std::string> mismatches;
};

OracleCheck compare_with_oracle(const FibParams& p, int radius, Roles roles)
{
    OracleCheck out;
    auto res = OracleSolver(p, roles).solve(radius);
    for (const auto& [v, o] : res.orientation) {
        ++out.resolved;
        auto f = vertex_orientation(pattern_point(v, p, roles), roles);
        if (f.corner != o.corner)
            out.mismatches.push_back("vertex (" + std::to_string(v.n0) + "," + std::to_string(v.n1) + "): oracle " +
                                     std::to_string(o.corner) + ", fractal " + std::to_string(f.corner));
    }
    return out;
}

}  // namespace

int run_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    Tiling t;
    try {
        t = assemble_tiling(cfg.params(), cfg.radius, cfg.mode, cfg.roles, cfg.margin);
    } catch (const MalformedNumber& e) {
        err << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const DegenerateParameter& e) {
        err << "degenerate parameters: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const ResolutionFailure& e) {
        err << "degenerate parameters: " << e.what() << "\n";
        return kExitDegenerate;
    }
    auto rep = verify(t);
    if (!rep.ok()) {
        err << "verification failed\n" << report_to_json(rep);
        return kExitDefects;
    }
    if (cfg.format == OutputFormat::json) out << tiling_to_json(t);
    else out << tiling_to_svg(t, cfg.colouring, cfg.decoration);
    return kExitOk;
}

int run_verify(const std::string& document, std::ostream& out, std::ostream& err)
{
    Tiling t;
    try {
        t = tiling_from_json(document);
    } catch (const DegenerateParameter& e) {
        err << "degenerate parameters: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        err << "unreadable tiling document: " << e.what() << "\n";
        return kExitFailure;
    }
    auto rep = verify(t);
    out << report_to_json(rep);
    return rep.ok() ? kExitOk : kExitDefects;
}

int run_stats(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    FibParams p;
    Tiling t;
    try {
        p = cfg.params();
        t = assemble_tiling(p, cfg.radius, cfg.mode, cfg.roles, cfg.margin);
    } catch (const std::domain_error& e) {
        err << "degenerate parameters: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const ResolutionFailure& e) {
        err << "degenerate parameters: " << e.what() << "\n";
        return kExitDegenerate;
    }
    auto rep = verify(t);
    out << "params      d0=" << p.d[0].str() << " d1=" << p.d[1].str() << " d2=" << p.d[2].str() << "\n";
    out << "window      radius=" << t.window.radius << " interior=" << t.window.interior << " mode=" << to_string(t.mode)
        << " roles=" << to_string(t.roles) << "\n";
    out << "coverage    interior_kites=" << rep.interior_kites << " missing=" << rep.missing.size()
        << " double=" << rep.double_covered.size() << "\n";
    out << "interior tiles by type\n";
    for (auto type : kTypes) out << "  " << std::left << std::setw(16) << to_string(type) << count_of(rep, type) << "\n";
    out << "H clusters  flipped=" << rep.clusters << " lightblue=" << rep.cluster_lightblue
        << (rep.cluster_lightblue == 3 * rep.clusters ? "  (lightblue = 3 x flipped)" : "  (lightblue != 3 x flipped)")
        << "\n";
    out << "gap statistics over lines -" << cfg.radius << ".." << cfg.radius << "\n";
    for (int k = 0; k < 3; ++k) {
        auto w = fib_word(-cfg.radius, 2 * cfg.radius, p.d[k]);
        std::size_t l = 0;
        for (auto g : w) l += g == GapLabel::L;
        std::size_t s = w.size() - l;
        out << "  family " << k << "  L=" << l << " S=" << s;
        if (s) out << " L/S=" << std::fixed << std::setprecision(4) << static_cast<double>(l) / s;
        out << std::defaultfloat << "\n";
    }
    return rep.ok() ? kExitOk : kExitDefects;
}

int run_oracle_diff(const std::vector<ParamPair>& params, int radius, Roles roles, std::ostream& out,
                    std::ostream& err)
{
    std::size_t total = 0, bad = 0;
    for (const auto& pp : params) {
        OracleCheck c;
        try {
            c = compare_with_oracle(pair_params(pp), radius, roles);
        } catch (const std::domain_error& e) {
            err << "degenerate parameters " << pp.first << " " << pp.second << ": " << e.what() << "\n";
            return kExitDegenerate;
        }
        out << "d0=" << pp.first << " d1=" << pp.second << " resolved=" << c.resolved
            << " mismatches=" << c.mismatches.size() << "\n";
        for (const auto& m : c.mismatches) out << "  " << m << "\n";
        total += c.resolved;
        bad += c.mismatches.size();
    }
    out << "total resolved=" << total << " mismatches=" << bad << "\n";
    return bad == 0 ? kExitOk : kExitFailure;
}

int run_fibword(const std::string& d, std::int64_t start, std::int64_t count, std::ostream& out, std::ostream& err)
{
    try {
        out << to_string(fib_word(start, count, GoldenNumber::parse(d))) << "\n";
    } catch (const std::domain_error& e) {
        err << "degenerate parameter: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitDegenerate;
    }
    return kExitOk;
}

int run_tables(const std::string& dir, int check_radius, std::ostream& out, std::ostream& err)
{
    Tables t = builtin_tables();
    write_tables(t, dir);
    out << "wrote " << dir << "/" << kRegionFile << " and " << dir << "/" << kOrientationFile << "\n";
    Tables back = load_tables(dir);
    if (back.regions.to_json_text() != t.regions.to_json_text() ||
        back.orientation.to_json_text(back.regions) != t.orientation.to_json_text(t.regions)) {
        err << "tables do not round-trip\n";
        return kExitFailure;
    }
    if (check_radius <= 0) return kExitOk;
    std::size_t bad = 0;
    for (const auto& pp : preset_params()) {
        auto p = pair_params(pp);
        auto res = OracleSolver(p).solve(check_radius);
        // grey hats are exactly the ones the propagation settles in its first two rounds
        std::size_t grey_mismatch = 0;
        for (const auto& v : enumerate_window(check_radius / 2)) {
            bool grey = hat_type(pattern_point(v, p)) == HatType::grey;
            auto it = res.round.find(v);
            bool early = it != res.round.end() && it->second <= 2;
            if (grey != early) ++grey_mismatch;
        }
        auto c = compare_with_oracle(p, check_radius, Roles::standard);
        out << "d0=" << pp.first << " d1=" << pp.second << " grey/early-round mismatches=" << grey_mismatch
            << " orientation resolved=" << c.resolved << " mismatches=" << c.mismatches.size() << "\n";
        bad += grey_mismatch + c.mismatches.size();
    }
    return bad == 0 ? kExitOk : kExitFailure;
}

}  // namespace hatgrid::cli
