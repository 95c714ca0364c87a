#include <doctest.h>

#include "hatgrid/fibline.hpp"
#include "support/decimal_oracle.hpp"

using namespace hatgrid;

namespace {

const GoldenNumber kFifth(Rational(1, 5));

// a(n) from the decimal reference
long long ref_a(long n, const std::string& d)
{
    return oracle::floor_of(oracle::value(d, "0") + oracle::Dec(n) * oracle::phi());
}

}  // namespace

TEST_CASE("line index split")
{
    CHECK(fib_index(0, kFifth) == FibIndex{0, 0});
    CHECK(ref_a(2, "1/5") == 1);
    CHECK(fib_index(2, kFifth) == FibIndex{1, 1});
    CHECK(ref_a(-1, "1/5") == -1);
    CHECK(fib_index(-1, kFifth) == FibIndex{-1, 0});
    for (long n = -200; n <= 200; ++n) {
        CHECK(fib_index(n, kFifth).a == ref_a(n, "1/5"));
        CHECK(fib_index(n, GoldenNumber(Rational(-12, 35))).a == ref_a(n, "-12/35"));
    }
}

TEST_CASE("fraction stays strictly inside the unit interval")
{
    for (long n = -100; n <= 100; ++n) {
        auto f = fib_fraction(n, kFifth);
        CHECK(f.sign() > 0);
        CHECK(f < GoldenNumber(1));
    }
}

TEST_CASE("degenerate offsets are rejected")
{
    CHECK_THROWS_AS(fib_index(0, GoldenNumber(0)), DegenerateParameter);
    CHECK_THROWS_AS(fib_index(0, GoldenNumber(2) - GoldenNumber::phi()), DegenerateParameter);
    CHECK_THROWS_AS(FibParams::from_pair(kFifth, -kFifth), DegenerateParameter);
    CHECK_THROWS(FibParams::from_triple(kFifth, kFifth, kFifth));
    CHECK_NOTHROW(FibParams::from_pair(kFifth, GoldenNumber(Rational(1, 7))));
}

TEST_CASE("gap labels and line colours")
{
    CHECK(gap_label(0, kFifth) == GapLabel::S);
    CHECK(gap_label(1, kFifth) == GapLabel::L);
    CHECK(gap_label(3, kFifth) == GapLabel::S);
    CHECK(line_colour(2, kFifth) == LineColour::black);
    CHECK(line_colour(1, kFifth) == LineColour::blue);
    CHECK(line_colour(4, kFifth) == LineColour::blue);
    for (long n = -100; n < 100; ++n) {
        bool s = ref_a(n + 1, "1/5") == ref_a(n, "1/5");
        CHECK((gap_label(n, kFifth) == GapLabel::S) == s);
    }
}

TEST_CASE("gap words")
{
    CHECK(fib_word(0, 0, kFifth).empty());
    CHECK(to_string(fib_word(0, 6, kFifth)) == "SLLSLS");
    auto w = fib_word(-57, 300, kFifth);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i] == gap_label(-57 + static_cast<long>(i), kFifth));
    auto s = to_string(fib_word(-5000, 10000, GoldenNumber(Rational(3, 11))));
    CHECK(s.find("SS") == std::string::npos);
    CHECK(s.find("LLL") == std::string::npos);
}

TEST_CASE("substitution")
{
    using G = GapLabel;
    CHECK(substitute({G::S}, SubstitutionSteps::one) == std::vector<G>{G::L});
    CHECK(substitute({G::L}, SubstitutionSteps::one) == std::vector<G>{G::S, G::L});
    auto two = substitute({G::L}, SubstitutionSteps::two);
    CHECK(std::count(two.begin(), two.end(), G::S) == 1);
    CHECK(std::count(two.begin(), two.end(), G::L) == 2);
    auto w = fib_word(0, 200, kFifth);
    CHECK(substitute(w, SubstitutionSteps::two) ==
          substitute(substitute(w, SubstitutionSteps::one), SubstitutionSteps::one));
    // image of a gap word is again free of SS and LLL
    auto img = to_string(substitute(w, SubstitutionSteps::one));
    CHECK(img.find("SS") == std::string::npos);
    CHECK(img.find("LLL") == std::string::npos);
}

TEST_CASE("blue lines come in runs of two or four")
{
    for (auto d : {kFifth, GoldenNumber(Rational(-3, 8)), GoldenNumber(Rational(4, 19))}) {
        const long lo = -400, hi = 400;
        auto pairs = blue_pairs(lo, hi - lo + 1, d);
        for (auto [a, b] : pairs) {
            CHECK(b == a + 1);
            CHECK(line_colour(a, d) == LineColour::blue);
            CHECK(line_colour(b, d) == LineColour::blue);
        }
        // maximal runs of blue lines strictly inside the range
        long run = 0;
        bool started = false;
        for (long n = lo + 2; n < hi - 2; ++n) {
            if (line_colour(n, d) == LineColour::blue) {
                ++run;
                continue;
            }
            if (started && run) {
                CHECK((run == 2 || run == 4));
                if (run == 4) {
                    // pair, L, pair
                    CHECK(gap_label(n - 3, d) == GapLabel::L);
                    CHECK(gap_label(n - 4, d) == GapLabel::S);
                    CHECK(gap_label(n - 2, d) == GapLabel::S);
                }
            }
            started = true;
            run = 0;
        }
    }
}
