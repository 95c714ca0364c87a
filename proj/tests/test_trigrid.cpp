#include <doctest.h>

#include <set>

#include "hatgrid/trigrid.hpp"

using namespace hatgrid;

namespace {

FibParams sample()
{
    return FibParams::from_pair(GoldenNumber(Rational(1, 5)), GoldenNumber(Rational(1, 7)));
}

}  // namespace

TEST_CASE("vertex line indices")
{
    CHECK(vertex_lines({0, 0}) == Triple{0, 0, 0});
    CHECK(vertex_lines({2, -1}) == Triple{2, -1, -1});
    CHECK(vertex_lines({-3, 5}) == Triple{-3, 5, -2});
}

TEST_CASE("six-component index vector")
{
    auto p = sample();
    CHECK(p.d[2] == GoldenNumber(Rational(-12, 35)));
    auto iv = index6({0, 0}, p);
    CHECK(iv.a == Triple{0, 0, -1});
    CHECK(iv.b == Triple{0, 0, 1});
    auto iv1 = index6({1, 0}, p);
    CHECK(iv1.a[0] == 0);
    CHECK(iv1.b[0] == 1);
    for (const auto& v : enumerate_window(10)) {
        auto x = index6(v, p);
        auto n = vertex_lines(v);
        for (int k = 0; k < 3; ++k) CHECK(x.a[k] + x.b[k] == n[k]);
        // the a's of one vertex sum to -1 or -2
        auto s = x.a[0] + x.a[1] + x.a[2];
        CHECK((s == -1 || s == -2));
    }
}

TEST_CASE("window enumeration")
{
    CHECK(enumerate_window(0) == std::vector<VertexId>{{0, 0}});
    CHECK(enumerate_window(1).size() == 7);
    CHECK(enumerate_window(2).size() == 19);
    CHECK(enumerate_window(10).size() == 1 + 3 * 10 * 11);
    auto w = enumerate_window(5);
    CHECK(std::is_sorted(w.begin(), w.end()));
    for (const auto& v : w) CHECK(hex_norm(v) <= 5);
}

TEST_CASE("black line count never reaches three")
{
    auto p = sample();
    for (const auto& v : enumerate_window(20)) {
        int c = black_count(v, p);
        CHECK(c >= 0);
        CHECK(c <= 2);
        int direct = 0;
        auto n = vertex_lines(v);
        for (int k = 0; k < 3; ++k) direct += line_colour(n[k], p.d[k]) == LineColour::black;
        CHECK(c == direct);
    }
}

TEST_CASE("triangle adjacency")
{
    auto up = make_triangle(0, 0, -1);
    auto down = make_triangle(0, -1, -1);
    CHECK(up.pointing() == Pointing::up);
    CHECK(down.pointing() == Pointing::down);
    CHECK_THROWS(make_triangle(0, 0, 0));
    auto vu = triangle_vertices(up);
    CHECK(vu[0] == LatticePoint{1, 0, -1});
    for (const auto& v : vu) CHECK(v[0] + v[1] + v[2] == 0);
    // every triangle appears around each of its vertices
    for (auto t : {up, down}) {
        for (const auto& v : triangle_vertices(t)) {
            auto around = triangles_at(v);
            CHECK(std::find(around.begin(), around.end(), t) != around.end());
            std::set<TriangleAddr> distinct(around.begin(), around.end());
            CHECK(distinct.size() == 6);
        }
    }
}

TEST_CASE("lattice symmetries")
{
    Triple x{3, -5, 2};
    CHECK(rotate(rotate(rotate(x))) == x);
    CHECK(mirror(mirror(x)) == x);
    KiteAddr k{make_triangle(1, -2, 0), 2};
    CHECK(rotate(rotate(rotate(k))) == k);
    CHECK(mirror(mirror(k)) == k);
    for (int c = 0; c < 3; ++c) CHECK(mirror_corner(mirror_corner(c)) == c);
    // the kite's corner vertex moves with the symmetry
    auto corner_vertex = [](const KiteAddr& q) { return triangle_vertices(q.triangle)[q.corner]; };
    for (int c = 0; c < 3; ++c) {
        KiteAddr q{make_triangle(2, 0, -3), c};
        CHECK(corner_vertex(rotate(q)) == rotate(corner_vertex(q)));
        CHECK(corner_vertex(mirror(q)) == mirror(corner_vertex(q)));
    }
}
