#include "hatgrid/cli.hpp"

namespace hatgrid::cli {

FibParams RunConfig::params() const
{
    return FibParams::from_pair(GoldenNumber(parse_rational(d0)), GoldenNumber(parse_rational(d1)));
}

std::vector<ParamPair> preset_params()
{
    return {{"1/5", "1/7"}, {"3/10", "2/9"}, {"-3/8", "5/13"}, {"2/3", "-1/11"}, {"5/17", "4/19"}};
}

}  // namespace hatgrid::cli
