#include "hatgrid/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hatgrid {

using json = nlohmann::ordered_json;

namespace {

GoldenNumber phi_pow(int e)
{
    return pow(GoldenNumber::phi(), e);
}

GoldenNumber frac(long p, long q)
{
    return GoldenNumber(Rational(p, q));
}

// w[(i + j) % 3] = v[i]: relabels families so that index 0 of v becomes index j
Bary shift(const Bary& v, int j)
{
    Bary w;
    for (int i = 0; i < 3; ++i) w[(i + j) % 3] = v[i];
    return w;
}

std::vector<Bary> shift(const std::vector<Bary>& poly, int j)
{
    std::vector<Bary> out;
    for (const auto& v : poly) out.push_back(shift(v, j));
    return out;
}

Bary unit(int k)
{
    Bary e{GoldenNumber(0), GoldenNumber(0), GoldenNumber(0)};
    e[k] = GoldenNumber(1);
    return e;
}

// centre of the white-pair parallelogram j
Bary pair_centre(int j)
{
    Bary c;
    c[j] = frac(1, 2);
    c[(j + 2) % 3] = frac(1, 2) * GoldenNumber::phi();
    c[(j + 1) % 3] = frac(1, 2) * phi_pow(2);
    return c;
}

GoldenNumber orient2(const Bary& a, const Bary& b, const Bary& p)
{
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
}

double orient2d(const std::array<double, 3>& a, const std::array<double, 3>& b, const std::array<double, 3>& p)
{
    return (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
}

// rounding error of to_double for a golden number, generously bounded
double error_bound(const GoldenNumber& x)
{
    return (std::fabs(x.rational_part().get_d()) + std::fabs(x.phi_part().get_d()) + 1.0) * 1e-14;
}

void make_ccw(std::vector<Bary>& poly)
{
    if (polygon_area2(poly).sign() < 0) std::reverse(poly.begin(), poly.end());
}

json bary_json(const Bary& v)
{
    return json::array({v[0].str(), v[1].str(), v[2].str()});
}

Bary bary_from(const json& j)
{
    if (!j.is_array() || j.size() != 3) throw std::runtime_error("table point must have 3 coordinates");
    return {GoldenNumber::parse(j[0].get<std::string>()), GoldenNumber::parse(j[1].get<std::string>()),
            GoldenNumber::parse(j[2].get<std::string>())};
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p);
    if (!in) throw std::runtime_error("cannot read table " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

GoldenNumber polygon_area2(const std::vector<Bary>& poly)
{
    GoldenNumber s(0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % poly.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return s;
}

RegionTable RegionTable::builtin()
{
    const GoldenNumber z(0), one(1), p1 = phi_pow(1), p2 = phi_pow(2), p3 = phi_pow(3), p4 = phi_pow(4);
    RegionTable t;
    std::vector<Bary> light{{one, z, z}, {p1, p2, z}, {p1, z, p2}};
    std::vector<Bary> half{{p3, p2, p2}, {z, p1, p2}, {z, p2, p1}};
    std::vector<Bary> tri{{p1, p2, z}, {p2, p2, p3}, {p1, p4, p3}};
    std::vector<Bary> pair{{p2, p2, p3}, {p1, p4, p3}, {p1, z, p2}, {p2, p3, p2}};
    for (int j = 0; j < 3; ++j)
        t.regions.push_back({"lightblue_" + std::to_string(j), HatType::lightblue, shift(light, j)});
    t.regions.push_back({"isolated", HatType::white_isolated, {{p3, p2, p2}, {p2, p3, p2}, {p2, p2, p3}}});
    for (int j = 0; j < 3; ++j)
        t.regions.push_back({"half_rhombus_" + std::to_string(j), HatType::grey, shift(half, j)});
    for (int j = 0; j < 3; ++j)
        t.regions.push_back({"grey_triangle_" + std::to_string(j), HatType::grey, shift(tri, j)});
    for (int j = 0; j < 3; ++j)
        t.regions.push_back({"pair_" + std::to_string(j), HatType::white_pair, shift(pair, j)});
    for (auto& r : t.regions) make_ccw(r.polygon);
    t.validate();
    return t;
}

void RegionTable::validate() const
{
    if (regions.empty()) throw std::runtime_error("region table is empty");
    GoldenNumber total(0);
    for (const auto& r : regions) {
        if (r.polygon.size() < 3) throw std::runtime_error("region " + r.name + " has fewer than 3 vertices");
        if (r.type == HatType::flipped) throw std::runtime_error("pattern regions never carry the flipped type");
        for (std::size_t i = 0; i < r.polygon.size(); ++i) {
            const auto& a = r.polygon[i];
            const auto& b = r.polygon[(i + 1) % r.polygon.size()];
            const auto& c = r.polygon[(i + 2) % r.polygon.size()];
            if (!(a[0] + a[1] + a[2] == GoldenNumber(1)))
                throw std::runtime_error("region " + r.name + " has a vertex off the pattern plane");
            if (orient2(a, b, c).sign() <= 0)
                throw std::runtime_error("region " + r.name + " is not strictly convex and counter-clockwise");
        }
        total += polygon_area2(r.polygon);
    }
    if (!(total == polygon_area2({unit(0), unit(1), unit(2)})))
        throw std::runtime_error("region areas do not add up to the pattern triangle");
}

std::size_t RegionTable::locate(const Bary& f) const
{
    std::array<double, 3> fd{f[0].to_double(), f[1].to_double(), f[2].to_double()};
    double err = 4 * std::max({error_bound(f[0]), error_bound(f[1]), error_bound(f[2])});
    for (std::size_t i = 0; i < regions.size(); ++i) {
        const auto& poly = regions[i].polygon;
        bool out = false, touch = false;
        for (std::size_t e = 0; e < poly.size() && !out; ++e) {
            const auto& a = poly[e];
            const auto& b = poly[(e + 1) % poly.size()];
            std::array<double, 3> ad{a[0].to_double(), a[1].to_double(), a[2].to_double()};
            std::array<double, 3> bd{b[0].to_double(), b[1].to_double(), b[2].to_double()};
            double od = orient2d(ad, bd, fd);
            int s = std::fabs(od) > err ? (od > 0 ? 1 : -1) : orient2(a, b, f).sign();
            if (s == 0) touch = true;
            else if (s < 0) out = true;
        }
        if (out) continue;
        if (touch) throw DegenerateParameter("pattern point lies on the boundary of region " + regions[i].name);
        return i;
    }
    throw InternalInconsistency("pattern point outside every region");
}

std::size_t RegionTable::find(const std::string& name) const
{
    for (std::size_t i = 0; i < regions.size(); ++i)
        if (regions[i].name == name) return i;
    throw std::runtime_error("unknown region " + name);
}

std::string RegionTable::to_json_text() const
{
    json doc;
    doc["format"] = "hatgrid-pattern-regions/1";
    doc["frame"] = "fractional gap coordinates (f0,f1,f2), second plane reflected so that f0+f1+f2=1";
    json rs = json::array();
    for (const auto& r : regions) {
        json poly = json::array();
        for (const auto& v : r.polygon) poly.push_back(bary_json(v));
        rs.push_back({{"name", r.name}, {"type", to_string(r.type)}, {"polygon", poly}});
    }
    doc["regions"] = rs;
    return doc.dump(2) + "\n";
}

RegionTable RegionTable::from_json_text(const std::string& text)
{
    json doc = json::parse(text);
    RegionTable t;
    for (const auto& r : doc.at("regions")) {
        Region reg;
        reg.name = r.at("name").get<std::string>();
        reg.type = parse_hat_type(r.at("type").get<std::string>());
        for (const auto& v : r.at("polygon")) reg.polygon.push_back(bary_from(v));
        make_ccw(reg.polygon);
        t.regions.push_back(std::move(reg));
    }
    t.validate();
    return t;
}

OrientationTable OrientationTable::builtin(const RegionTable& regions)
{
    OrientationTable t;
    const GoldenNumber Phi2 = pow(GoldenNumber::Phi(), 2), Phi4 = pow(GoldenNumber::Phi(), 4);
    const Bary centre{frac(1, 3), frac(1, 3), frac(1, 3)};
    t.rules.resize(regions.regions.size());
    for (int j = 0; j < 3; ++j) {
        auto& lb = t.rules[regions.find("lightblue_" + std::to_string(j))];
        lb.source = lb.target = unit(j);
        lb.scale = Phi2;
        lb.colour_map[j] = (j + 2) % 3;

        auto& pr = t.rules[regions.find("pair_" + std::to_string(j))];
        pr.source = pair_centre(j);
        pr.target = pair_centre((j + 1) % 3);
        pr.scale = Phi2;
        pr.colour_map[j] = (j + 1) % 3;

        t.rules[regions.find("half_rhombus_" + std::to_string(j))].base_colour = j;
        t.rules[regions.find("grey_triangle_" + std::to_string(j))].base_colour = (j + 2) % 3;
    }
    auto& iso = t.rules[regions.find("isolated")];
    iso.source = iso.target = centre;
    iso.scale = -Phi4;
    iso.roll = 1;
    t.validate(regions);
    return t;
}

void OrientationTable::validate(const RegionTable& regions) const
{
    if (rules.size() != regions.regions.size()) throw std::runtime_error("orientation rules do not match regions");
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& r = rules[i];
        if (r.base_colour) {
            if (*r.base_colour < 0 || *r.base_colour > 2) throw std::runtime_error("base colour out of range");
            continue;
        }
        if (r.roll < 0 || r.roll > 2) throw std::runtime_error("roll out of range");
        for (int c : r.colour_map)
            if (c < 0 || c > 2) throw std::runtime_error("colour map out of range");
        // the maps must expand, or the iteration would not shrink the unknown area
        GoldenNumber s = r.scale.sign() < 0 ? -r.scale : r.scale;
        if (!(s > GoldenNumber(1))) throw std::runtime_error("map for " + regions.regions[i].name + " does not expand");
    }
}

std::string OrientationTable::to_json_text(const RegionTable& regions) const
{
    json doc;
    doc["format"] = "hatgrid-orientation-maps/1";
    doc["colour"] = "colour = centre-triangle corner carrying the extra kites";
    doc["map"] = "f -> roll^k(target + scale*(f - source)), then reduced into the pattern triangle";
    json rs = json::array();
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const auto& r = rules[i];
        json e;
        e["region"] = regions.regions[i].name;
        if (r.base_colour) {
            e["base_colour"] = *r.base_colour;
        } else {
            e["map"] = {{"source", bary_json(r.source)},
                        {"target", bary_json(r.target)},
                        {"scale", r.scale.str()},
                        {"roll", r.roll}};
            e["colour_map"] = r.colour_map;
        }
        rs.push_back(e);
    }
    doc["rules"] = rs;
    return doc.dump(2) + "\n";
}

OrientationTable OrientationTable::from_json_text(const std::string& text, const RegionTable& regions)
{
    json doc = json::parse(text);
    OrientationTable t;
    t.rules.resize(regions.regions.size());
    std::vector<bool> seen(regions.regions.size(), false);
    for (const auto& e : doc.at("rules")) {
        std::size_t i = regions.find(e.at("region").get<std::string>());
        if (seen[i]) throw std::runtime_error("duplicate orientation rule");
        seen[i] = true;
        auto& r = t.rules[i];
        if (e.contains("base_colour")) {
            r.base_colour = e.at("base_colour").get<int>();
        } else {
            const auto& m = e.at("map");
            r.source = bary_from(m.at("source"));
            r.target = bary_from(m.at("target"));
            r.scale = GoldenNumber::parse(m.at("scale").get<std::string>());
            r.roll = m.at("roll").get<int>();
            r.colour_map = e.at("colour_map").get<std::array<int, 3>>();
        }
    }
    for (bool s : seen)
        if (!s) throw std::runtime_error("orientation table misses a region");
    t.validate(regions);
    return t;
}

Tables builtin_tables()
{
    Tables t;
    t.regions = RegionTable::builtin();
    t.orientation = OrientationTable::builtin(t.regions);
    t.source = "built-in";
    return t;
}

Tables load_tables(const std::filesystem::path& dir)
{
    Tables t;
    t.regions = RegionTable::from_json_text(read_file(dir / kRegionFile));
    t.orientation = OrientationTable::from_json_text(read_file(dir / kOrientationFile), t.regions);
    t.source = dir.string();
    return t;
}

void write_tables(const Tables& t, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    std::ofstream(dir / kRegionFile) << t.regions.to_json_text();
    std::ofstream(dir / kOrientationFile) << t.orientation.to_json_text(t.regions);
}

const Tables& active_tables()
{
    static const Tables t = [] {
        if (const char* env = std::getenv("HATGRID_TABLE_DIR"); env && *env) return load_tables(env);
#ifdef HATGRID_DEFAULT_TABLE_DIR
        std::filesystem::path dir(HATGRID_DEFAULT_TABLE_DIR);
        if (std::filesystem::exists(dir / kRegionFile) && std::filesystem::exists(dir / kOrientationFile))
            return load_tables(dir);
#endif
        return builtin_tables();
    }();
    return t;
}

}  // namespace hatgrid
