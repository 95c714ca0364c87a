#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hatgrid/exactnum.hpp"

namespace hatgrid {

// Offsets of the three line families. d0 + d1 + d2 = 0 and no d_k in Z + phi*Z.
struct FibParams {
    std::array<GoldenNumber, 3> d;

    static FibParams from_pair(const GoldenNumber& d0, const GoldenNumber& d1);
    static FibParams from_triple(const GoldenNumber& d0, const GoldenNumber& d1, const GoldenNumber& d2);
    // lattice mirror swapping families 1 and 2
    FibParams mirrored() const { return from_triple(d[0], d[2], d[1]); }
};

enum class GapLabel : unsigned char { S, L };
enum class LineColour { black, blue };
enum class SubstitutionSteps { one, two };

struct FibIndex {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend bool operator==(const FibIndex&, const FibIndex&) = default;
};

void require_nondegenerate(const GoldenNumber& d);

// a = floor(phi n + d), b = n - a
FibIndex fib_index(std::int64_t n, const GoldenNumber& d);
// phi n + d - a, always strictly inside (0, 1)
GoldenNumber fib_fraction(std::int64_t n, const GoldenNumber& d);
// gap between lines n and n+1
GapLabel gap_label(std::int64_t n, const GoldenNumber& d);
LineColour line_colour(std::int64_t n, const GoldenNumber& d);
std::vector<GapLabel> fib_word(std::int64_t n_start, std::int64_t count, const GoldenNumber& d);
std::vector<GapLabel> substitute(const std::vector<GapLabel>& seq, SubstitutionSteps steps);
// Pairs of blue lines (n, n+1) flanking an S gap, for lines in [n_start, n_start+count).
std::vector<std::pair<std::int64_t, std::int64_t>> blue_pairs(std::int64_t n_start, std::int64_t count,
                                                              const GoldenNumber& d);

char symbol(GapLabel g);
std::string to_string(const std::vector<GapLabel>& seq);

}  // namespace hatgrid
