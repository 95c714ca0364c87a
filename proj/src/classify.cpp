#include "hatgrid/classify.hpp"

#include <stdexcept>

#include "hatgrid/tables.hpp"

namespace hatgrid {

const char* to_string(HatType t)
{
    switch (t) {
    case HatType::lightblue: return "lightblue";
    case HatType::grey: return "grey";
    case HatType::white_pair: return "white_pair";
    case HatType::white_isolated: return "white_isolated";
    case HatType::flipped: return "flipped";
    }
    return "?";
}

HatType parse_hat_type(const std::string& s)
{
    for (auto t : {HatType::lightblue, HatType::grey, HatType::white_pair, HatType::white_isolated, HatType::flipped})
        if (s == to_string(t)) return t;
    throw std::invalid_argument("unknown hat type '" + s + "'");
}

Pointing plane_of(const Realisation3& vf)
{
    // the sum is phi * (a0 + a1 + a2), and that index sum is -1 or -2
    GoldenNumber s = coordinate_sum(vf);
    if (s == -GoldenNumber::phi()) return Pointing::up;
    if (s == GoldenNumber(-2) * GoldenNumber::phi()) return Pointing::down;
    throw InternalInconsistency("v_f off both planes: sum " + s.str());
}

PatternPoint reduce_to_pattern(const Realisation3& vb, Pointing plane, const FibParams& p)
{
    // v_b_k = Phi^2 (d_k - frac_k)
    const GoldenNumber phi2 = pow(GoldenNumber::phi(), 2);
    Bary frac;
    GoldenNumber sum(0);
    for (int k = 0; k < 3; ++k) {
        frac[k] = p.d[k] - phi2 * vb[k];
        if (!(frac[k] > GoldenNumber(0) && frac[k] < GoldenNumber(1)))
            throw InternalInconsistency("v_b coordinate outside its cube range");
        sum += frac[k];
    }
    Pointing got;
    if (sum == GoldenNumber(1)) got = Pointing::up;
    else if (sum == GoldenNumber(2)) got = Pointing::down;
    else throw InternalInconsistency("reduced point off the two pattern planes");
    if (got != plane) throw InternalInconsistency("v_b plane disagrees with v_f plane");
    PatternPoint pt{frac, plane};
    if (plane == Pointing::down)
        for (auto& x : pt.f) x = GoldenNumber(1) - x;
    return pt;
}

PatternPoint pattern_point(VertexId v, const FibParams& p)
{
    auto iv = index6(v, p);
    return reduce_to_pattern(v_b(iv), plane_of(v_f(iv)), p);
}

PatternPoint mirror(const PatternPoint& pt)
{
    return {{pt.f[0], pt.f[2], pt.f[1]}, pt.pointing};
}

PatternPoint pattern_point(VertexId v, const FibParams& p, Roles roles)
{
    auto pt = pattern_point(v, p);
    return roles == Roles::mirrored ? mirror(pt) : pt;
}

HatType hat_type(const PatternPoint& pt)
{
    const auto& tables = active_tables();
    return tables.regions.regions[tables.regions.locate(pt.f)].type;
}

std::vector<HatType> type_constraint_from_lines(int black_lines)
{
    switch (black_lines) {
    case 0: return {HatType::lightblue, HatType::white_isolated};
    case 1: return {HatType::white_pair, HatType::grey};
    case 2: return {HatType::grey};
    }
    throw std::invalid_argument("black line count must be 0, 1 or 2");
}

}  // namespace hatgrid
