#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "hatgrid/fibline.hpp"

namespace hatgrid {

using Triple = std::array<std::int64_t, 3>;

// Vertex of the dual triangulation T; line indices (n0, n1, -n0-n1).
struct VertexId {
    std::int64_t n0 = 0;
    std::int64_t n1 = 0;
    std::int64_t n2() const { return -n0 - n1; }
    auto operator<=>(const VertexId&) const = default;
};

struct IndexVector6 {
    Triple a{};
    Triple b{};
    friend bool operator==(const IndexVector6&, const IndexVector6&) = default;
};

// Unit triangle of U addressed by the floors of its three gap coordinates.
// Gap coordinates sum to zero, so the address sum is -1 or -2.
enum class Pointing { up, down };

struct TriangleAddr {
    Triple t{};
    std::int64_t sum() const { return t[0] + t[1] + t[2]; }
    bool valid() const { return sum() == -1 || sum() == -2; }
    // sum -1: vertices t + e_j; sum -2: vertices t + 1 - e_j
    Pointing pointing() const { return sum() == -1 ? Pointing::up : Pointing::down; }
    auto operator<=>(const TriangleAddr&) const = default;
};

// Kite at corner j of a triangle; corner j is the vertex opposite the edge of family j.
struct KiteAddr {
    TriangleAddr triangle;
    int corner = 0;
    auto operator<=>(const KiteAddr&) const = default;
};

// Lattice vertex of U: integer gap coordinates summing to zero.
using LatticePoint = Triple;

Triple vertex_lines(VertexId v);
IndexVector6 index6(VertexId v, const FibParams& p);
int black_count(VertexId v, const FibParams& p);
// max(|n0|,|n1|,|n2|) <= radius, sorted by (n0, n1)
std::vector<VertexId> enumerate_window(int radius);
std::int64_t hex_norm(VertexId v);

std::array<LatticePoint, 3> triangle_vertices(const TriangleAddr& t);
// the six triangles around a lattice vertex
std::array<TriangleAddr, 6> triangles_at(const LatticePoint& v);
TriangleAddr make_triangle(std::int64_t t0, std::int64_t t1, std::int64_t t2);
const char* to_string(Pointing p);

// 2pi/3 rotation about the origin and the mirror swapping families 1 and 2
Triple rotate(const Triple& x);
Triple mirror(const Triple& x);
KiteAddr rotate(const KiteAddr& k);
KiteAddr mirror(const KiteAddr& k);
int mirror_corner(int corner);

struct VertexHash {
    std::size_t operator()(const VertexId& v) const noexcept;
};
struct TriangleHash {
    std::size_t operator()(const TriangleAddr& t) const noexcept;
};
struct KiteHash {
    std::size_t operator()(const KiteAddr& k) const noexcept;
};
struct TripleHash {
    std::size_t operator()(const Triple& t) const noexcept;
};

}  // namespace hatgrid
