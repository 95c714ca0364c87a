#pragma once

#include <array>
#include <string>
#include <vector>

#include "hatgrid/realise.hpp"

namespace hatgrid {

enum class HatType { lightblue, grey, white_pair, white_isolated, flipped };

const char* to_string(HatType t);
HatType parse_hat_type(const std::string& s);

using Bary = std::array<GoldenNumber, 3>;

// v_b reduced into one triangle of the periodic pattern: the fractional parts of the
// three gap coordinates, reflected through the centre for the second plane so that
// f0 + f1 + f2 = 1 and 0 < f_k < 1. pointing records which plane the vertex came from.
struct PatternPoint {
    Bary f;
    Pointing pointing = Pointing::up;
    friend bool operator==(const PatternPoint&, const PatternPoint&) = default;
};

// plane of v_f: coordinate sum -phi (up) or -2 phi (down)
Pointing plane_of(const Realisation3& vf);
PatternPoint reduce_to_pattern(const Realisation3& vb, Pointing plane, const FibParams& p);
PatternPoint pattern_point(VertexId v, const FibParams& p);
// the mirror image of the pattern (families 1 and 2 swapped)
PatternPoint mirror(const PatternPoint& pt);
PatternPoint pattern_point(VertexId v, const FibParams& p, Roles roles);

HatType hat_type(const PatternPoint& pt);
std::vector<HatType> type_constraint_from_lines(int black_lines);

}  // namespace hatgrid
