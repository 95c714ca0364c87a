#pragma once

#include <array>

#include "hatgrid/trigrid.hpp"

namespace hatgrid {

using Realisation3 = std::array<GoldenNumber, 3>;

enum class CentreMode { standard, mirrored, tenkite };
// Which mirror form plays the unflipped role.
enum class Roles { standard, mirrored };

// Point of U's plane in gap coordinates f_k (distance to the family-k line through the
// origin, in units of the triangle height). f0 + f1 + f2 = 0; lattice vertices are the
// integer points, so the sqrt3 of the Cartesian frame never enters the coordinates.
struct Embed2 {
    std::array<GoldenNumber, 3> f;
    friend bool operator==(const Embed2&, const Embed2&) = default;
};

Realisation3 v_r(const IndexVector6& iv);
Realisation3 v_f(const IndexVector6& iv);
Realisation3 v_b(const IndexVector6& iv);
Realisation3 v_phi(const IndexVector6& iv);
GoldenNumber coordinate_sum(const Realisation3& v);

// The literal centre formulas: a_k + b_k - b_{k+1}, a_k + b_k - b_{k-1}, a_k + 2 b_k.
Triple centre_index(const IndexVector6& iv, CentreMode mode);
// Centre triangle address: the formula plus the fixed shift of the mode.
TriangleAddr centre_triangle(const IndexVector6& iv, CentreMode mode);
Triple centre_offset(CentreMode mode);

// Exact position of T's vertex inside its centre triangle.
Embed2 embed_T(VertexId v, const FibParams& p, CentreMode mode);
Embed2 embed_T(VertexId v, const FibParams& p, Roles roles);
// Inverse of embed_T extended to the whole plane: real line indices (n0, n1, n2).
std::array<GoldenNumber, 3> unembed(const Embed2& x, const FibParams& p, CentreMode mode);
bool strictly_inside(const Embed2& x, const TriangleAddr& t);

// Euclidean quantities with the U edge as unit: dot product, and the tangent of the
// angle from u to w divided by sqrt3 (both exact).
GoldenNumber dot(const Embed2& u, const Embed2& w);
GoldenNumber tan_over_sqrt3(const Embed2& u, const Embed2& w);
Embed2 difference(const Embed2& a, const Embed2& b);
std::array<double, 2> to_cartesian(const std::array<double, 3>& f);
std::array<double, 2> to_cartesian(const Embed2& x);

CentreMode centre_mode(Roles r);

}  // namespace hatgrid
