#include "hatgrid/fibline.hpp"

#include <stdexcept>

namespace hatgrid {

FibParams FibParams::from_triple(const GoldenNumber& d0, const GoldenNumber& d1, const GoldenNumber& d2)
{
    FibParams p{{d0, d1, d2}};
    if (!(d0 + d1 + d2).is_zero()) throw DegenerateParameter("offsets must sum to zero");
    for (const auto& d : p.d) require_nondegenerate(d);
    return p;
}

FibParams FibParams::from_pair(const GoldenNumber& d0, const GoldenNumber& d1)
{
    return from_triple(d0, d1, -(d0 + d1));
}

void require_nondegenerate(const GoldenNumber& d)
{
    if (d.in_integer_lattice())
        throw DegenerateParameter("offset " + d.str() + " lies in Z + phi*Z");
}

FibIndex fib_index(std::int64_t n, const GoldenNumber& d)
{
    require_nondegenerate(d);
    std::int64_t a = floor_i64(GoldenNumber::phi() * GoldenNumber(static_cast<long>(n)) + d);
    return {a, n - a};
}

GoldenNumber fib_fraction(std::int64_t n, const GoldenNumber& d)
{
    GoldenNumber x = GoldenNumber::phi() * GoldenNumber(static_cast<long>(n)) + d;
    return x - GoldenNumber(Rational(floor(x)));
}

GapLabel gap_label(std::int64_t n, const GoldenNumber& d)
{
    return fib_index(n + 1, d).a == fib_index(n, d).a ? GapLabel::S : GapLabel::L;
}

LineColour line_colour(std::int64_t n, const GoldenNumber& d)
{
    return gap_label(n - 1, d) == GapLabel::S || gap_label(n, d) == GapLabel::S ? LineColour::blue
                                                                                : LineColour::black;
}

std::vector<GapLabel> fib_word(std::int64_t n_start, std::int64_t count, const GoldenNumber& d)
{
    if (count < 0) throw std::invalid_argument("fib_word: negative count");
    require_nondegenerate(d);
    std::vector<GapLabel> out;
    out.reserve(static_cast<std::size_t>(count));
    // step the fractional part: it wraps past 1 exactly when a increases
    GoldenNumber frac = fib_fraction(n_start, d);
    const GoldenNumber phi = GoldenNumber::phi(), one(1);
    for (std::int64_t i = 0; i < count; ++i) {
        frac += phi;
        if (compare(frac, one) == Order::less) {
            out.push_back(GapLabel::S);
        } else {
            frac -= one;
            out.push_back(GapLabel::L);
        }
    }
    return out;
}

std::vector<GapLabel> substitute(const std::vector<GapLabel>& seq, SubstitutionSteps steps)
{
    std::vector<GapLabel> out;
    out.reserve(seq.size() * 2);
    for (GapLabel g : seq) {
        if (g == GapLabel::S) {
            out.push_back(GapLabel::L);
        } else {
            out.push_back(GapLabel::S);
            out.push_back(GapLabel::L);
        }
    }
    if (steps == SubstitutionSteps::two) return substitute(out, SubstitutionSteps::one);
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> blue_pairs(std::int64_t n_start, std::int64_t count,
                                                              const GoldenNumber& d)
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (count < 2) return out;
    auto word = fib_word(n_start, count - 1, d);
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] == GapLabel::S) {
            auto n = n_start + static_cast<std::int64_t>(i);
            out.emplace_back(n, n + 1);
        }
    return out;
}

char symbol(GapLabel g)
{
    return g == GapLabel::S ? 'S' : 'L';
}

std::string to_string(const std::vector<GapLabel>& seq)
{
    std::string s;
    s.reserve(seq.size());
    for (GapLabel g : seq) s += symbol(g);
    return s;
}

}  // namespace hatgrid
