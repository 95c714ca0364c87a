#include <doctest.h>

#include <filesystem>
#include <map>
#include <random>

#include "hatgrid/tables.hpp"

using namespace hatgrid;

TEST_CASE("built-in region table is a partition of the pattern triangle")
{
    auto t = RegionTable::builtin();
    CHECK(t.regions.size() == 13);
    CHECK_NOTHROW(t.validate());
    GoldenNumber total(0);
    for (const auto& r : t.regions) total += polygon_area2(r.polygon);
    std::vector<Bary> tri{{GoldenNumber(1), GoldenNumber(0), GoldenNumber(0)},
                          {GoldenNumber(0), GoldenNumber(1), GoldenNumber(0)},
                          {GoldenNumber(0), GoldenNumber(0), GoldenNumber(1)}};
    CHECK(total == polygon_area2(tri));
}

TEST_CASE("random points land in exactly one region")
{
    auto t = RegionTable::builtin();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> u(1, 9999);
    int checked = 0;
    while (checked < 3000) {
        long a = u(rng), b = u(rng);
        if (a + b >= 10000) continue;
        Bary f{GoldenNumber(Rational(a, 10000)), GoldenNumber(Rational(b, 10000)),
               GoldenNumber(Rational(10000 - a - b, 10000))};
        std::size_t r = 0;
        try {
            r = t.locate(f);
        } catch (const DegenerateParameter&) {
            continue;  // exactly on an edge
        }
        CHECK(r < t.regions.size());
        ++checked;
    }
}

TEST_CASE("corner and centre regions have the expected areas")
{
    auto t = RegionTable::builtin();
    std::map<HatType, GoldenNumber> area;
    GoldenNumber total(0);
    for (const auto& r : t.regions) {
        area[r.type] += polygon_area2(r.polygon);
        total += polygon_area2(r.polygon);
    }
    // corner triangles of side phi^2, centre triangle of side phi^4
    auto phi = GoldenNumber::phi();
    CHECK(area[HatType::lightblue] / total == GoldenNumber(3) * pow(phi, 4));
    CHECK(area[HatType::white_isolated] / total == pow(phi, 8));
}

TEST_CASE("orientation table matches the regions")
{
    auto r = RegionTable::builtin();
    auto o = OrientationTable::builtin(r);
    CHECK(o.rules.size() == r.regions.size());
    CHECK_NOTHROW(o.validate(r));
    int base = 0;
    for (std::size_t i = 0; i < o.rules.size(); ++i) {
        bool is_base = o.rules[i].base_colour.has_value();
        base += is_base;
        // grey regions are exactly the base cases
        CHECK(is_base == (r.regions[i].type == HatType::grey));
    }
    CHECK(base == 6);
}

TEST_CASE("json round trip")
{
    auto t = builtin_tables();
    auto r2 = RegionTable::from_json_text(t.regions.to_json_text());
    CHECK(r2.to_json_text() == t.regions.to_json_text());
    auto o2 = OrientationTable::from_json_text(t.orientation.to_json_text(t.regions), r2);
    CHECK(o2.to_json_text(r2) == t.orientation.to_json_text(t.regions));
    CHECK_THROWS(RegionTable::from_json_text("{\"format\":\"other\"}"));
}

TEST_CASE("shipped table files equal the built-in tables")
{
    auto shipped = load_tables(SHIPPED_TABLE_DIR);
    auto t = builtin_tables();
    CHECK(shipped.regions.to_json_text() == t.regions.to_json_text());
    CHECK(shipped.orientation.to_json_text(shipped.regions) == t.orientation.to_json_text(t.regions));
}

TEST_CASE("write and load through a directory")
{
    auto dir = std::filesystem::temp_directory_path() / "hatgrid_table_test";
    std::filesystem::remove_all(dir);
    write_tables(builtin_tables(), dir);
    auto back = load_tables(dir);
    CHECK(back.regions.to_json_text() == builtin_tables().regions.to_json_text());
    std::filesystem::remove_all(dir);
    CHECK_THROWS(load_tables(dir));
}
