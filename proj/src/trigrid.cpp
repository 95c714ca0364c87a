#include "hatgrid/trigrid.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hatgrid {

namespace {

std::size_t mix(std::size_t h, std::uint64_t v)
{
    v *= 0x9e3779b97f4a7c15ULL;
    v ^= v >> 29;
    return h ^ (v + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2));
}

}  // namespace

Triple vertex_lines(VertexId v)
{
    return {v.n0, v.n1, v.n2()};
}

IndexVector6 index6(VertexId v, const FibParams& p)
{
    IndexVector6 iv;
    auto n = vertex_lines(v);
    for (int k = 0; k < 3; ++k) {
        auto fi = fib_index(n[k], p.d[k]);
        iv.a[k] = fi.a;
        iv.b[k] = fi.b;
    }
    return iv;
}

int black_count(VertexId v, const FibParams& p)
{
    auto n = vertex_lines(v);
    int c = 0;
    for (int k = 0; k < 3; ++k)
        if (line_colour(n[k], p.d[k]) == LineColour::black) ++c;
    return c;
}

std::vector<VertexId> enumerate_window(int radius)
{
    if (radius < 0) throw std::invalid_argument("negative window radius");
    std::vector<VertexId> out;
    for (std::int64_t n0 = -radius; n0 <= radius; ++n0)
        for (std::int64_t n1 = -radius; n1 <= radius; ++n1)
            if (std::llabs(n0 + n1) <= radius) out.push_back({n0, n1});
    return out;
}

std::int64_t hex_norm(VertexId v)
{
    return std::max({std::llabs(v.n0), std::llabs(v.n1), std::llabs(v.n2())});
}

std::array<LatticePoint, 3> triangle_vertices(const TriangleAddr& t)
{
    std::array<LatticePoint, 3> out;
    bool up = t.pointing() == Pointing::up;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            std::int64_t e = i == j ? 1 : 0;
            out[j][i] = up ? t.t[i] + e : t.t[i] + 1 - e;
        }
    return out;
}

std::array<TriangleAddr, 6> triangles_at(const LatticePoint& v)
{
    std::array<TriangleAddr, 6> out;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            std::int64_t e = i == j ? 1 : 0;
            out[j].t[i] = v[i] - e;
            out[3 + j].t[i] = v[i] - 1 + e;
        }
    return out;
}

TriangleAddr make_triangle(std::int64_t t0, std::int64_t t1, std::int64_t t2)
{
    TriangleAddr t{{t0, t1, t2}};
    if (!t.valid()) throw std::invalid_argument("triangle address sum must be -1 or -2");
    return t;
}

const char* to_string(Pointing p)
{
    return p == Pointing::up ? "up" : "down";
}

Triple rotate(const Triple& x)
{
    return {x[2], x[0], x[1]};
}

Triple mirror(const Triple& x)
{
    return {x[0], x[2], x[1]};
}

int mirror_corner(int corner)
{
    return (3 - corner) % 3;
}

KiteAddr rotate(const KiteAddr& k)
{
    return {{rotate(k.triangle.t)}, (k.corner + 1) % 3};
}

KiteAddr mirror(const KiteAddr& k)
{
    return {{mirror(k.triangle.t)}, mirror_corner(k.corner)};
}

std::size_t VertexHash::operator()(const VertexId& v) const noexcept
{
    return mix(mix(0, static_cast<std::uint64_t>(v.n0)), static_cast<std::uint64_t>(v.n1));
}

std::size_t TripleHash::operator()(const Triple& t) const noexcept
{
    std::size_t h = 0;
    for (auto x : t) h = mix(h, static_cast<std::uint64_t>(x));
    return h;
}

std::size_t TriangleHash::operator()(const TriangleAddr& t) const noexcept
{
    return TripleHash{}(t.t);
}

std::size_t KiteHash::operator()(const KiteAddr& k) const noexcept
{
    return mix(TripleHash{}(k.triangle.t), static_cast<std::uint64_t>(k.corner));
}

}  // namespace hatgrid
