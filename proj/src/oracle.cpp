#include "hatgrid/orient.hpp"

#include <unordered_map>

namespace hatgrid {

namespace {

struct OracleHat {
    TriangleAddr centre;
    Hand hand;
    std::optional<VertexId> vertex;
    unsigned candidates = 0b111;
    int corner = -1;
};

}  // namespace

OracleResult oracle_orient(const std::vector<VertexId>& window, const std::map<VertexId, HatType>& types,
                           const std::map<VertexId, TriangleAddr>& centres, Roles roles)
{
    const TileMode mode = TileMode::hat8;
    std::vector<OracleHat> hats;
    std::vector<TriangleAddr> all_centres, lightblue;
    for (const auto& v : window) {
        const auto& c = centres.at(v);
        hats.push_back({c, hand_of(Chirality::unflipped, roles), v});
        all_centres.push_back(c);
        if (types.at(v) == HatType::lightblue) lightblue.push_back(c);
    }
    for (const auto& t : flipped_centres(all_centres, lightblue, mode, roles))
        hats.push_back({t, hand_of(Chirality::flipped, roles), std::nullopt});

    std::unordered_map<KiteAddr, std::size_t, KiteHash> owner;
    for (std::size_t h = 0; h < hats.size(); ++h)
        for (const auto& k : core_kites(hats[h].centre, mode, hats[h].hand))
            if (!owner.emplace(k, h).second) throw InternalInconsistency("two hat cores share a kite");

    // extra kites of every (hat, corner), computed once
    std::vector<std::array<std::vector<KiteAddr>, 3>> extras(hats.size());
    for (std::size_t h = 0; h < hats.size(); ++h)
        for (int c = 0; c < 3; ++c) extras[h][c] = extra_kites(hats[h].centre, c, mode, hats[h].hand);

    OracleResult res;
    std::vector<std::size_t> open;
    for (std::size_t h = 0; h < hats.size(); ++h) open.push_back(h);
    int round = 0;
    while (!open.empty()) {
        ++round;
        std::vector<std::size_t> forced, still;
        for (auto h : open) {
            unsigned mask = hats[h].candidates;
            for (int c = 0; c < 3; ++c) {
                if (!(mask & (1u << c))) continue;
                for (const auto& k : extras[h][c])
                    if (owner.count(k)) {
                        mask &= ~(1u << c);
                        break;
                    }
            }
            if (mask == 0) throw InternalInconsistency("a hat has no feasible corner left");
            hats[h].candidates = mask;
            if ((mask & (mask - 1)) == 0) forced.push_back(h);
            else still.push_back(h);
        }
        if (forced.empty()) break;
        for (auto h : forced) {
            int c = __builtin_ctz(hats[h].candidates);
            for (const auto& k : extras[h][c])
                if (!owner.emplace(k, h).second) throw InternalInconsistency("two committed hats claim one kite");
            hats[h].corner = c;
            Orientation o{c, hats[h].centre.pointing()};
            if (hats[h].vertex) {
                res.orientation[*hats[h].vertex] = o;
                res.round[*hats[h].vertex] = round;
            } else {
                res.flipped[hats[h].centre] = o;
            }
        }
        open = std::move(still);
        res.rounds = round;
    }
    for (auto h : open)
        if (hats[h].vertex) res.unresolved.push_back(*hats[h].vertex);
    std::sort(res.unresolved.begin(), res.unresolved.end());
    return res;
}

OracleResult OracleSolver::solve(int window_radius) const
{
    auto window = enumerate_window(window_radius);
    std::map<VertexId, HatType> types;
    std::map<VertexId, TriangleAddr> centres;
    for (const auto& v : window) {
        types[v] = hat_type(pattern_point(v, params_, roles_));
        centres[v] = centre_triangle(index6(v, params_), centre_mode(roles_));
    }
    auto res = oracle_orient(window, types, centres, roles_);
    res.window_radius = window_radius;
    return res;
}

OracleResult OracleSolver::solve_adaptive(int target_radius) const
{
    int radius = std::max(2 * target_radius, 1);
    for (;;) {
        auto res = solve(radius);
        bool done = true;
        for (const auto& v : res.unresolved)
            if (hex_norm(v) <= target_radius) {
                done = false;
                break;
            }
        if (done || 2 * radius > 8 * std::max(target_radius, 1)) return res;
        radius *= 2;
    }
}

}  // namespace hatgrid
