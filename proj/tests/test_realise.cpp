#include <doctest.h>

#include <set>

#include "hatgrid/classify.hpp"
#include "hatgrid/realise.hpp"
#include "hatgrid/templates.hpp"

using namespace hatgrid;

namespace {

FibParams sample()
{
    return FibParams::from_pair(GoldenNumber(Rational(1, 5)), GoldenNumber(Rational(1, 7)));
}

const GoldenNumber Phi = GoldenNumber::Phi();

}  // namespace

TEST_CASE("four realisations on small index vectors")
{
    IndexVector6 zero;
    Realisation3 origin{GoldenNumber(0), GoldenNumber(0), GoldenNumber(0)};
    CHECK(v_r(zero) == origin);
    CHECK(v_f(zero) == origin);
    CHECK(v_b(zero) == origin);
    CHECK(v_phi(zero) == origin);

    auto p = sample();
    auto iv = index6({1, 0}, p);
    auto r = v_r(iv);
    CHECK(r == Realisation3{GoldenNumber(1), GoldenNumber(0), GoldenNumber(-1)});
    CHECK(v_phi(iv) == Realisation3{Phi, GoldenNumber(0), -Phi});

    IndexVector6 a1{{1, 0, 0}, {0, 0, 0}};
    CHECK(v_f(a1) == Realisation3{Phi, GoldenNumber(0), GoldenNumber(0)});
    IndexVector6 b1{{0, 0, 0}, {1, 0, 0}};
    CHECK(v_b(b1)[0] == -Phi);
}

TEST_CASE("v_b components stay in a window narrower than Phi squared")
{
    auto p = sample();
    auto Phi2 = Phi * Phi;
    for (int k = 0; k < 3; ++k) {
        std::set<GoldenNumber> seen;
        for (const auto& v : enumerate_window(10)) seen.insert(v_b(index6(v, p))[k]);
        CHECK(*seen.rbegin() - *seen.begin() < Phi2);
    }
    // the fractional part is recovered as d - phi^2 v_b
    auto phi2 = pow(GoldenNumber::phi(), 2);
    for (const auto& v : enumerate_window(6)) {
        auto vb = v_b(index6(v, p));
        for (int k = 0; k < 3; ++k) {
            auto frac = p.d[k] - phi2 * vb[k];
            CHECK(frac.sign() > 0);
            CHECK(frac < GoldenNumber(1));
        }
    }
}

TEST_CASE("centre index formulas")
{
    IndexVector6 zero;
    CHECK(centre_index(zero, CentreMode::standard) == Triple{0, 0, 0});
    IndexVector6 iv{{0, 0, 0}, {1, 0, 0}};
    CHECK(centre_index(iv, CentreMode::standard) == Triple{1, 0, -1});
    CHECK(centre_index(iv, CentreMode::mirrored) == Triple{1, -1, 0});
    CHECK(centre_index(iv, CentreMode::tenkite) == Triple{2, 0, 0});
    IndexVector6 bad{{0, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(centre_triangle(bad, CentreMode::standard), InternalInconsistency);
}

TEST_CASE("centre pointing follows the v_f plane")
{
    auto p = sample();
    for (const auto& v : enumerate_window(15)) {
        auto iv = index6(v, p);
        auto plane = plane_of(v_f(iv));
        CHECK(centre_triangle(iv, CentreMode::standard).pointing() == plane);
        CHECK(centre_triangle(iv, CentreMode::mirrored).pointing() == plane);
        CHECK(centre_triangle(iv, CentreMode::tenkite).pointing() != plane);
    }
}

TEST_CASE("standard and mirrored centres are mirror images")
{
    auto p = sample();
    auto q = p.mirrored();
    for (const auto& v : enumerate_window(12)) {
        VertexId w{v.n0, v.n2()};
        auto s = centre_triangle(index6(v, p), CentreMode::standard);
        auto m = centre_triangle(index6(w, q), CentreMode::mirrored);
        CHECK(mirror(s.t) == m.t);
    }
}

TEST_CASE("tenkite centres do not depend on roles")
{
    CHECK(centre_mode(TileMode::tenkite, Roles::standard) == centre_mode(TileMode::tenkite, Roles::mirrored));
    CHECK(centre_mode(TileMode::hat8, Roles::standard) != centre_mode(TileMode::hat8, Roles::mirrored));
}

TEST_CASE("embedding lands inside the centre triangle and inverts")
{
    auto p = sample();
    for (auto mode : {CentreMode::standard, CentreMode::mirrored, CentreMode::tenkite}) {
        for (const auto& v : enumerate_window(10)) {
            auto x = embed_T(v, p, mode);
            CHECK(x.f[0] + x.f[1] + x.f[2] == GoldenNumber(0));
            CHECK(strictly_inside(x, centre_triangle(index6(v, p), mode)));
            auto n = unembed(x, p, mode);
            auto lines = vertex_lines(v);
            for (int k = 0; k < 3; ++k) CHECK(n[k] == GoldenNumber(static_cast<long>(lines[k])));
        }
    }
}

TEST_CASE("metric helpers")
{
    Embed2 e{{GoldenNumber(1), GoldenNumber(0), GoldenNumber(-1)}};
    Embed2 f{{GoldenNumber(0), GoldenNumber(1), GoldenNumber(-1)}};
    CHECK(dot(e, e) == GoldenNumber(1));
    CHECK(dot(f, f) == GoldenNumber(1));
    // lattice edges 60 degrees apart: tan = sqrt3
    CHECK(tan_over_sqrt3(f, e).sign() != 0);
    auto t = tan_over_sqrt3(e, f);
    CHECK((t == GoldenNumber(1) || t == GoldenNumber(-1)));
    auto c = to_cartesian(e);
    CHECK(c[0] * c[0] + c[1] * c[1] == doctest::Approx(1.0));
}
