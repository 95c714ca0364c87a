#include "hatgrid/cli.hpp"

#include <json.hpp>

namespace hatgrid::cli {

using json = nlohmann::ordered_json;

namespace {

json kite_json(const KiteAddr& k)
{
    return json::array({k.triangle.t[0], k.triangle.t[1], k.triangle.t[2], k.corner});
}

KiteAddr kite_from(const json& j)
{
    if (!j.is_array() || j.size() != 4) throw std::runtime_error("kite must be [t0,t1,t2,corner]");
    KiteAddr k{{{j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()}}, j[3].get<int>()};
    if (!k.triangle.valid() || k.corner < 0 || k.corner > 2) throw std::runtime_error("invalid kite address");
    return k;
}

Pointing parse_pointing(const std::string& s)
{
    if (s == "up") return Pointing::up;
    if (s == "down") return Pointing::down;
    throw std::runtime_error("unknown pointing '" + s + "'");
}

}  // namespace

std::string tiling_to_json(const Tiling& t)
{
    json doc;
    doc["params"] = {{"d0", t.params.d[0].str()}, {"d1", t.params.d[1].str()}, {"d2", t.params.d[2].str()}};
    doc["mode"] = to_string(t.mode);
    doc["roles"] = to_string(t.roles);
    doc["window"] = {{"radius", t.window.radius}, {"interior", t.window.interior}};
    json tiles = json::array();
    for (const auto& tile : t.tiles) {
        json kites = json::array();
        for (const auto& k : tile.kites) kites.push_back(kite_json(k));
        tiles.push_back({{"chirality", to_string(tile.chirality)},
                         {"type", to_string(tile.type)},
                         {"orientation",
                          {{"corner", tile.orientation.corner}, {"pointing", to_string(tile.orientation.pointing)}}},
                         {"centre", json::array({tile.centre.t[0], tile.centre.t[1], tile.centre.t[2]})},
                         {"kites", kites}});
    }
    doc["tiles"] = tiles;
    return doc.dump() + "\n";
}

Tiling tiling_from_json(const std::string& text)
{
    json doc = json::parse(text);
    Tiling t;
    const auto& p = doc.at("params");
    t.params = FibParams::from_triple(GoldenNumber::parse(p.at("d0").get<std::string>()),
                                      GoldenNumber::parse(p.at("d1").get<std::string>()),
                                      GoldenNumber::parse(p.at("d2").get<std::string>()));
    t.mode = parse_tile_mode(doc.at("mode").get<std::string>());
    t.roles = parse_roles(doc.at("roles").get<std::string>());
    t.window.radius = doc.at("window").at("radius").get<int>();
    t.window.interior = doc.at("window").at("interior").get<int>();
    for (const auto& j : doc.at("tiles")) {
        HatTile tile;
        tile.chirality = parse_chirality(j.at("chirality").get<std::string>());
        tile.type = parse_hat_type(j.at("type").get<std::string>());
        tile.orientation.corner = j.at("orientation").at("corner").get<int>();
        tile.orientation.pointing = parse_pointing(j.at("orientation").at("pointing").get<std::string>());
        const auto& c = j.at("centre");
        tile.centre = make_triangle(c.at(0).get<std::int64_t>(), c.at(1).get<std::int64_t>(),
                                    c.at(2).get<std::int64_t>());
        for (const auto& k : j.at("kites")) tile.kites.push_back(kite_from(k));
        t.tiles.push_back(std::move(tile));
    }
    return t;
}

std::string report_to_json(const VerifyReport& r)
{
    json doc;
    doc["ok"] = r.ok();
    doc["interior_kites"] = r.interior_kites;
    json missing = json::array(), dbl = json::array();
    for (const auto& k : r.missing) missing.push_back(kite_json(k));
    for (const auto& k : r.double_covered) dbl.push_back(kite_json(k));
    doc["missing"] = missing;
    doc["double_covered"] = dbl;
    doc["malformed"] = r.malformed;
    json counts = json::object();
    for (auto type : {HatType::lightblue, HatType::grey, HatType::white_pair, HatType::white_isolated,
                      HatType::flipped}) {
        auto it = r.counts.find(type);
        counts[to_string(type)] = it == r.counts.end() ? 0 : it->second;
    }
    doc["counts"] = counts;
    doc["clusters"] = {{"flipped", r.clusters},
                       {"lightblue", r.cluster_lightblue},
                       {"lightblue_outside", r.lightblue_outside_clusters}};
    return doc.dump(2) + "\n";
}

}  // namespace hatgrid::cli
