#include "hatgrid/realise.hpp"

#include <cmath>

namespace hatgrid {

namespace {

GoldenNumber gn(std::int64_t x)
{
    return GoldenNumber(static_cast<long>(x));
}

const GoldenNumber& phi2()
{
    static const GoldenNumber v = pow(GoldenNumber::phi(), 2);
    return v;
}

}  // namespace

Realisation3 v_r(const IndexVector6& iv)
{
    Realisation3 out;
    for (int k = 0; k < 3; ++k) out[k] = gn(iv.a[k] + iv.b[k]);
    return out;
}

Realisation3 v_f(const IndexVector6& iv)
{
    Realisation3 out;
    for (int k = 0; k < 3; ++k) out[k] = gn(iv.a[k]) * GoldenNumber::Phi() + gn(iv.b[k]);
    return out;
}

Realisation3 v_b(const IndexVector6& iv)
{
    Realisation3 out;
    for (int k = 0; k < 3; ++k) out[k] = gn(iv.a[k]) - gn(iv.b[k]) * GoldenNumber::Phi();
    return out;
}

Realisation3 v_phi(const IndexVector6& iv)
{
    Realisation3 out = v_r(iv);
    for (auto& x : out) x *= GoldenNumber::Phi();
    return out;
}

GoldenNumber coordinate_sum(const Realisation3& v)
{
    return v[0] + v[1] + v[2];
}

Triple centre_index(const IndexVector6& iv, CentreMode mode)
{
    Triple c{};
    for (int k = 0; k < 3; ++k) {
        switch (mode) {
        case CentreMode::standard: c[k] = iv.a[k] + iv.b[k] - iv.b[(k + 1) % 3]; break;
        case CentreMode::mirrored: c[k] = iv.a[k] + iv.b[k] - iv.b[(k + 2) % 3]; break;
        case CentreMode::tenkite: c[k] = iv.a[k] + 2 * iv.b[k]; break;
        }
    }
    return c;
}

Triple centre_offset(CentreMode mode)
{
    if (mode == CentreMode::tenkite) return {-1, -1, -1};
    return {0, 0, 0};
}

TriangleAddr centre_triangle(const IndexVector6& iv, CentreMode mode)
{
    Triple c = centre_index(iv, mode), off = centre_offset(mode);
    TriangleAddr t;
    for (int k = 0; k < 3; ++k) t.t[k] = c[k] + off[k];
    if (!t.valid()) throw InternalInconsistency("centre triangle address off the two pointing classes");
    return t;
}

CentreMode centre_mode(Roles r)
{
    return r == Roles::standard ? CentreMode::standard : CentreMode::mirrored;
}

Embed2 embed_T(VertexId v, const FibParams& p, CentreMode mode)
{
    auto n = vertex_lines(v);
    Embed2 x;
    for (int k = 0; k < 3; ++k) {
        switch (mode) {
        case CentreMode::standard: {
            int k1 = (k + 1) % 3;
            x.f[k] = gn(n[k]) - phi2() * gn(n[k1]) + p.d[k1];
            break;
        }
        case CentreMode::mirrored: {
            int k1 = (k + 2) % 3;
            x.f[k] = gn(n[k]) - phi2() * gn(n[k1]) + p.d[k1];
            break;
        }
        case CentreMode::tenkite: x.f[k] = (GoldenNumber(1) + phi2()) * gn(n[k]) - p.d[k]; break;
        }
    }
    return x;
}

Embed2 embed_T(VertexId v, const FibParams& p, Roles roles)
{
    return embed_T(v, p, centre_mode(roles));
}

std::array<GoldenNumber, 3> unembed(const Embed2& x, const FibParams& p, CentreMode mode)
{
    std::array<GoldenNumber, 3> n;
    if (mode == CentreMode::tenkite) {
        GoldenNumber s = (GoldenNumber(1) + phi2()).inverse();
        for (int k = 0; k < 3; ++k) n[k] = (x.f[k] + p.d[k]) * s;
        return n;
    }
    // (I - phi^2 P) n = f - P d with P a cyclic shift, P^3 = I
    int step = mode == CentreMode::standard ? 1 : 2;
    std::array<GoldenNumber, 3> g;
    for (int k = 0; k < 3; ++k) g[k] = x.f[k] - p.d[(k + step) % 3];
    GoldenNumber phi4 = phi2() * phi2();
    GoldenNumber s = (GoldenNumber(1) - phi4 * phi2()).inverse();
    for (int k = 0; k < 3; ++k)
        n[k] = (g[k] + phi2() * g[(k + step) % 3] + phi4 * g[(k + 2 * step) % 3]) * s;
    return n;
}

bool strictly_inside(const Embed2& x, const TriangleAddr& t)
{
    for (int k = 0; k < 3; ++k) {
        GoldenNumber lo = gn(t.t[k]), hi = gn(t.t[k] + 1);
        if (!(lo < x.f[k] && x.f[k] < hi)) return false;
    }
    return true;
}

Embed2 difference(const Embed2& a, const Embed2& b)
{
    return {{a.f[0] - b.f[0], a.f[1] - b.f[1], a.f[2] - b.f[2]}};
}

// Cartesian: x = h f0, y = f1 + f0/2 with h = sqrt3/2.
GoldenNumber dot(const Embed2& u, const Embed2& w)
{
    GoldenNumber half(Rational(1, 2));
    GoldenNumber three_quarters(Rational(3, 4));
    return three_quarters * u.f[0] * w.f[0] + (u.f[1] + half * u.f[0]) * (w.f[1] + half * w.f[0]);
}

GoldenNumber tan_over_sqrt3(const Embed2& u, const Embed2& w)
{
    // cross = h (u0 w1 - u1 w0); tan = cross / dot
    GoldenNumber cross = u.f[0] * w.f[1] - u.f[1] * w.f[0];
    return cross / (GoldenNumber(2) * dot(u, w));
}

std::array<double, 2> to_cartesian(const std::array<double, 3>& f)
{
    static const double h = std::sqrt(3.0) / 2;
    return {h * f[0], f[1] + f[0] / 2};
}

std::array<double, 2> to_cartesian(const Embed2& x)
{
    return to_cartesian(std::array<double, 3>{x.f[0].to_double(), x.f[1].to_double(), x.f[2].to_double()});
}

}  // namespace hatgrid
